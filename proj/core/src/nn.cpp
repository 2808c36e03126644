#include "qibonn/nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qibonn/errors.hpp"
#include "qibonn/metrics.hpp"

namespace qibonn {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLogitClamp = 30.0;
}  // namespace

std::string to_string(ArchKind kind) {
  switch (kind) {
    case ArchKind::Shallow: return "shallow";
    case ArchKind::Deep: return "deep";
    case ArchKind::Res: return "res";
  }
  return "?";
}

ArchKind parse_arch(const std::string& name) {
  if (name == "shallow") return ArchKind::Shallow;
  if (name == "deep") return ArchKind::Deep;
  if (name == "res") return ArchKind::Res;
  throw ConfigError("unknown architecture '" + name +
                    "' (expected shallow, deep or res)");
}

void Architecture::validate() const {
  if (input_dim < 1) throw std::domain_error("architecture: input_dim < 1");
  if (hidden_width < 1)
    throw std::domain_error("architecture: hidden_width < 1");
  if (n_hidden_layers < 1)
    throw std::domain_error("architecture: n_hidden_layers < 1");
  if (output_dim < 1) throw std::domain_error("architecture: output_dim < 1");
  if (!(dropout_p >= 0.0 && dropout_p < 1.0))
    throw std::domain_error("architecture: dropout_p outside [0,1)");
}

namespace {

Layer init_layer(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
  Layer l;
  l.w = Matrix(fan_in, fan_out);
  double bound = std::sqrt(6.0 / static_cast<double>(fan_in));
  for (std::size_t i = 0; i < fan_in; ++i)
    for (std::size_t j = 0; j < fan_out; ++j) l.w(i, j) = rng.uniform(-bound, bound);
  l.b.assign(fan_out, 0.0);
  return l;
}

}  // namespace

MlpModel build(const Architecture& arch, Rng& rng) {
  arch.validate();
  MlpModel m;
  m.arch = arch;
  std::size_t in = arch.input_dim;
  std::size_t w = arch.hidden_width;
  std::size_t out = arch.output_dim;
  int L = arch.effective_hidden_layers();

  switch (arch.kind) {
    case ArchKind::Shallow:
      m.layers.push_back(init_layer(in, w, rng));
      m.layers.push_back(init_layer(w, out, rng));
      break;
    case ArchKind::Deep:
      m.layers.push_back(init_layer(in, w, rng));
      for (int i = 1; i < L; ++i) m.layers.push_back(init_layer(w, w, rng));
      m.layers.push_back(init_layer(w, out, rng));
      break;
    case ArchKind::Res:
      m.layers.push_back(init_layer(in, w, rng));  // projection
      for (int i = 0; i < L; ++i) {
        m.layers.push_back(init_layer(w, w, rng));
        m.layers.push_back(init_layer(w, w, rng));
      }
      m.layers.push_back(init_layer(w, out, rng));
      break;
  }
  return m;
}

namespace {

Matrix affine(const Matrix& x, const Layer& l) {
  Matrix z = matmul(x, l.w);
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) z(r, c) += l.b[c];
  return z;
}

void relu_inplace(Matrix& z) {
  for (double& v : z.data()) v = v > 0.0 ? v : 0.0;
}

// Inverted dropout: multiplier 1/(1-p) with probability 1-p, else 0.
// Returns the multiplier matrix so backward can reuse it.
Matrix dropout_mask(std::size_t rows, std::size_t cols, double p, Rng& rng) {
  Matrix m(rows, cols);
  double scale = 1.0 / (1.0 - p);
  for (double& v : m.data()) v = rng.uniform() < p ? 0.0 : scale;
  return m;
}

void mul_inplace(Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.data().size(); ++i) a.data()[i] *= b.data()[i];
}

// One stage of the forward pass: everything backward needs to retrace it.
struct StageCache {
  Matrix input;  // what the affine saw
  Matrix pre;    // pre-activation (or pre-skip sum for residual adds)
  Matrix drop;   // dropout multipliers; empty when dropout was off
};

struct ForwardCache {
  std::vector<StageCache> stages;
  Matrix logits;
};

// Shared by eval/train forward and by loss_and_grad. Stages are recorded
// in forward order; residual blocks contribute two stages plus the skip
// sum stored in the second one.
ForwardCache run_forward(const MlpModel& m, const Matrix& x, bool train_mode,
                         Rng* rng) {
  const Architecture& a = m.arch;
  if (x.cols() != static_cast<std::size_t>(a.input_dim))
    throw std::invalid_argument("forward: batch width != input_dim");
  bool drop = train_mode && a.dropout_p > 0.0;
  ForwardCache fc;

  auto activate = [&](Matrix z, const Matrix& input, Matrix* skip) {
    StageCache st;
    st.input = input;
    if (skip) {
      for (std::size_t i = 0; i < z.data().size(); ++i)
        z.data()[i] += skip->data()[i];
    }
    st.pre = z;
    relu_inplace(z);
    if (drop) {
      st.drop = dropout_mask(z.rows(), z.cols(), a.dropout_p, *rng);
      mul_inplace(z, st.drop);
    }
    fc.stages.push_back(std::move(st));
    return z;
  };

  Matrix h;
  std::size_t li = 0;
  switch (a.kind) {
    case ArchKind::Shallow:
    case ArchKind::Deep: {
      h = x;
      int L = a.effective_hidden_layers();
      for (int i = 0; i < L; ++i, ++li) h = activate(affine(h, m.layers[li]), h, nullptr);
      break;
    }
    case ArchKind::Res: {
      h = activate(affine(x, m.layers[0]), x, nullptr);
      li = 1;
      int L = a.effective_hidden_layers();
      for (int i = 0; i < L; ++i) {
        Matrix u = activate(affine(h, m.layers[li]), h, nullptr);
        ++li;
        Matrix v = affine(u, m.layers[li]);
        // The pair's second stage records the skip sum as its pre-activation
        // and u as the affine input.
        h = activate(std::move(v), u, &h);
        ++li;
      }
      break;
    }
  }
  StageCache head;
  head.input = h;
  fc.logits = affine(h, m.layers.back());
  fc.stages.push_back(std::move(head));
  return fc;
}

double clamp_logit(double z) {
  return std::min(kLogitClamp, std::max(-kLogitClamp, z));
}

// Mean cross-entropy and dL/dlogits. Binary head: sigmoid BCE on a single
// logit column; otherwise softmax CE. Stable forms throughout.
double ce_loss(const Matrix& logits, std::span<const int> labels,
               int output_dim, Matrix* dlogits) {
  std::size_t n = logits.rows();
  if (labels.size() != n)
    throw std::invalid_argument("loss: label count != batch rows");
  double loss = 0.0;
  if (dlogits) *dlogits = Matrix(n, logits.cols());

  if (output_dim == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      double z = clamp_logit(logits(i, 0));
      double y = static_cast<double>(labels[i]);
      // max(z,0) - z*y + log(1 + exp(-|z|))
      loss += std::max(z, 0.0) - z * y + std::log1p(std::exp(-std::abs(z)));
      if (dlogits) {
        double p = 1.0 / (1.0 + std::exp(-z));
        (*dlogits)(i, 0) = (p - y) / static_cast<double>(n);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      int y = labels[i];
      if (y < 0 || y >= output_dim)
        throw std::invalid_argument("loss: label out of range");
      double mx = -kInf;
      for (int c = 0; c < output_dim; ++c)
        mx = std::max(mx, clamp_logit(logits(i, c)));
      double sum = 0.0;
      for (int c = 0; c < output_dim; ++c)
        sum += std::exp(clamp_logit(logits(i, c)) - mx);
      double log_sum = std::log(sum) + mx;
      loss += log_sum - clamp_logit(logits(i, y));
      if (dlogits) {
        for (int c = 0; c < output_dim; ++c) {
          double p = std::exp(clamp_logit(logits(i, c)) - log_sum);
          (*dlogits)(i, c) =
              (p - (c == y ? 1.0 : 0.0)) / static_cast<double>(n);
        }
      }
    }
  }
  return loss / static_cast<double>(n);
}

double l2_term(const MlpModel& m, double weight_decay) {
  if (weight_decay == 0.0) return 0.0;
  double s = 0.0;
  for (const Layer& l : m.layers)
    for (double w : l.w.data()) s += w * w;
  return 0.5 * weight_decay * s;
}

std::vector<double> col_sums(const Matrix& m) {
  std::vector<double> s(m.cols(), 0.0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s[c] += m(r, c);
  return s;
}

}  // namespace

Matrix forward(const MlpModel& m, const Matrix& x) {
  return run_forward(m, x, false, nullptr).logits;
}

Matrix forward_train(const MlpModel& m, const Matrix& x, Rng& rng) {
  return run_forward(m, x, true, &rng).logits;
}

Matrix predict_scores(const MlpModel& m, const Matrix& x) {
  Matrix logits = forward(m, x);
  if (m.arch.output_dim == 1) {
    Matrix p(logits.rows(), 1);
    for (std::size_t i = 0; i < logits.rows(); ++i)
      p(i, 0) = 1.0 / (1.0 + std::exp(-logits(i, 0)));
    return p;
  }
  Matrix p(logits.rows(), logits.cols());
  for (std::size_t i = 0; i < logits.rows(); ++i) {
    double mx = -kInf;
    for (std::size_t c = 0; c < logits.cols(); ++c)
      mx = std::max(mx, logits(i, c));
    double sum = 0.0;
    for (std::size_t c = 0; c < logits.cols(); ++c) {
      p(i, c) = std::exp(logits(i, c) - mx);
      sum += p(i, c);
    }
    for (std::size_t c = 0; c < logits.cols(); ++c) p(i, c) /= sum;
  }
  return p;
}

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw std::domain_error("learning_rate <= 0");
  if (batch_size < 1) throw std::domain_error("batch_size < 1");
  if (weight_decay < 0.0) throw std::domain_error("weight_decay < 0");
  if (epochs < 0) throw std::domain_error("epochs < 0");
  if (!(momentum >= 0.0 && momentum < 1.0))
    throw std::domain_error("momentum outside [0,1)");
}

LossGrad loss_and_grad(const MlpModel& m, const Matrix& x,
                       std::span<const int> labels, double weight_decay,
                       bool train_mode, Rng& rng) {
  ForwardCache fc = run_forward(m, x, train_mode, &rng);
  Matrix dlogits;
  double loss =
      ce_loss(fc.logits, labels, m.arch.output_dim, &dlogits) +
      l2_term(m, weight_decay);
  if (!std::isfinite(loss))
    throw TrainingDivergedError("loss is not finite");

  LossGrad out;
  out.loss = loss;
  out.grads.layers.resize(m.layers.size());

  auto fill_layer = [&](std::size_t li, const Matrix& input,
                        const Matrix& dz) {
    Grads& g = out.grads;
    g.layers[li].w = matmul_at_b(input, dz);
    if (weight_decay != 0.0) {
      const Matrix& w = m.layers[li].w;
      for (std::size_t i = 0; i < w.data().size(); ++i)
        g.layers[li].w.data()[i] += weight_decay * w.data()[i];
    }
    g.layers[li].b = col_sums(dz);
  };

  // Head.
  std::size_t head = m.layers.size() - 1;
  fill_layer(head, fc.stages.back().input, dlogits);
  Matrix d = matmul_a_bt(dlogits, m.layers[head].w);  // grad wrt head input

  // Through a recorded stage: undo dropout, then the ReLU gate.
  auto through_stage = [&](const StageCache& st, Matrix grad) {
    if (st.drop.rows() > 0) mul_inplace(grad, st.drop);
    for (std::size_t i = 0; i < grad.data().size(); ++i)
      if (st.pre.data()[i] <= 0.0) grad.data()[i] = 0.0;
    return grad;
  };

  switch (m.arch.kind) {
    case ArchKind::Shallow:
    case ArchKind::Deep: {
      for (std::size_t li = head; li-- > 0;) {
        Matrix dz = through_stage(fc.stages[li], std::move(d));
        fill_layer(li, fc.stages[li].input, dz);
        if (li > 0) d = matmul_a_bt(dz, m.layers[li].w);
      }
      break;
    }
    case ArchKind::Res: {
      int L = m.arch.effective_hidden_layers();
      // Stages: 0 = proj, then (2i+1, 2i+2) per block, then head.
      for (int i = L - 1; i >= 0; --i) {
        std::size_t sa = 1 + 2 * static_cast<std::size_t>(i);  // u stage
        std::size_t sb = sa + 1;                               // skip stage
        std::size_t la = sa;  // layer indices line up with stage indices here
        std::size_t lb = sb;
        Matrix ds = through_stage(fc.stages[sb], std::move(d));
        fill_layer(lb, fc.stages[sb].input, ds);            // second affine
        Matrix du = matmul_a_bt(ds, m.layers[lb].w);
        Matrix duz = through_stage(fc.stages[sa], std::move(du));
        fill_layer(la, fc.stages[sa].input, duz);           // first affine
        d = matmul_a_bt(duz, m.layers[la].w);
        // Skip connection: block input also received ds directly.
        for (std::size_t k = 0; k < d.data().size(); ++k)
          d.data()[k] += ds.data()[k];
      }
      Matrix dz = through_stage(fc.stages[0], std::move(d));
      fill_layer(0, fc.stages[0].input, dz);
      break;
    }
  }
  return out;
}

double eval_loss(const MlpModel& m, const Matrix& x,
                 std::span<const int> labels, double weight_decay) {
  Matrix logits = forward(m, x);
  return ce_loss(logits, labels, m.arch.output_dim, nullptr) +
         l2_term(m, weight_decay);
}

std::vector<EpochPoint> train(MlpModel& m, const Dataset& train_ds,
                              const Dataset* val_ds, const TrainConfig& cfg) {
  cfg.validate();
  if (train_ds.n_rows() == 0)
    throw std::invalid_argument("train: empty training set");
  Rng rng(cfg.seed);

  const Matrix& x = train_ds.features();
  const std::vector<int>& y = train_ds.labels();
  std::size_t n = x.rows();
  std::size_t bs = std::min<std::size_t>(cfg.batch_size, n);

  Grads velocity;
  velocity.layers.resize(m.layers.size());
  for (std::size_t li = 0; li < m.layers.size(); ++li) {
    velocity.layers[li].w =
        Matrix(m.layers[li].w.rows(), m.layers[li].w.cols());
    velocity.layers[li].b.assign(m.layers[li].b.size(), 0.0);
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  std::vector<EpochPoint> curve;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < n; start += bs) {
      std::size_t stop = std::min(n, start + bs);
      Matrix bx(stop - start, x.cols());
      std::vector<int> by(stop - start);
      for (std::size_t i = start; i < stop; ++i) {
        for (std::size_t c = 0; c < x.cols(); ++c)
          bx(i - start, c) = x(order[i], c);
        by[i - start] = y[order[i]];
      }
      LossGrad lg = loss_and_grad(m, bx, by, cfg.weight_decay, true, rng);
      epoch_loss += lg.loss * static_cast<double>(stop - start);
      for (std::size_t li = 0; li < m.layers.size(); ++li) {
        Matrix& vw = velocity.layers[li].w;
        const Matrix& gw = lg.grads.layers[li].w;
        Matrix& w = m.layers[li].w;
        for (std::size_t k = 0; k < w.data().size(); ++k) {
          vw.data()[k] =
              cfg.momentum * vw.data()[k] - cfg.learning_rate * gw.data()[k];
          w.data()[k] += vw.data()[k];
        }
        std::vector<double>& vb = velocity.layers[li].b;
        const std::vector<double>& gb = lg.grads.layers[li].b;
        std::vector<double>& b = m.layers[li].b;
        for (std::size_t k = 0; k < b.size(); ++k) {
          vb[k] = cfg.momentum * vb[k] - cfg.learning_rate * gb[k];
          b[k] += vb[k];
        }
      }
    }
    EpochPoint pt;
    pt.epoch = epoch;
    pt.train_loss = epoch_loss / static_cast<double>(n);
    pt.val_loss =
        val_ds ? eval_loss(m, val_ds->features(), val_ds->labels(),
                           cfg.weight_decay)
               : kNaN;
    if (!std::isfinite(pt.train_loss))
      throw TrainingDivergedError("epoch loss is not finite");
    curve.push_back(pt);
  }
  return curve;
}

Architecture arch_from(const HyperparamVector& h, ArchKind kind,
                       int masked_dim, int k) {
  Architecture a;
  a.kind = kind;
  a.input_dim = masked_dim;
  a.hidden_width = h.hidden_width;
  a.n_hidden_layers = h.n_hidden_layers;
  a.output_dim = k == 2 ? 1 : k;
  a.dropout_p = h.dropout;
  return a;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

TrainConfig train_config_from(const HyperparamVector& h, int epochs,
                              std::uint64_t seed) {
  TrainConfig cfg;
  cfg.learning_rate = h.learning_rate;
  cfg.batch_size = h.batch_size;
  cfg.weight_decay = h.weight_decay;
  cfg.epochs = epochs;
  cfg.seed = seed;
  return cfg;
}

// Rank scores against labels; a partition whose labels are degenerate
// (single class) cannot rank, so ROC falls back to chance level.
double safe_roc(const Matrix& scores, std::span<const int> labels, int k) {
  try {
    if (k == 2) {
      std::vector<double> col(scores.rows());
      for (std::size_t i = 0; i < scores.rows(); ++i) col[i] = scores(i, 0);
      return roc_auc(col, labels);
    }
    return macro_ovr(scores, labels, RankMetric::RocAuc);
  } catch (const UndefinedMetricError&) {
    return 0.5;
  }
}

double safe_pr(const Matrix& scores, std::span<const int> labels, int k) {
  try {
    if (k == 2) {
      std::vector<double> col(scores.rows());
      for (std::size_t i = 0; i < scores.rows(); ++i) col[i] = scores(i, 0);
      return pr_auc(col, labels);
    }
    return macro_ovr(scores, labels, RankMetric::PrAuc);
  } catch (const UndefinedMetricError&) {
    return kNaN;
  }
}

}  // namespace

Objective make_objective(const Dataset& train_ds, const Dataset& val_ds,
                         ArchKind kind, int inner_epochs,
                         std::uint64_t seed) {
  // Captured by value: dataset copies share the source's access counter,
  // so leakage audits still see reads made through the closure.
  return [train_ds, val_ds, kind, inner_epochs,
          seed](const HyperparamVector& h) -> ObjectiveResult {
    ObjectiveResult res;
    try {
      Dataset tr = apply_mask(train_ds, h.feature_mask);
      Dataset va = apply_mask(val_ds, h.feature_mask);

      // Key all evaluation randomness on (seed, h): the same candidate
      // gets the same J regardless of evaluation order or thread.
      std::uint64_t eval_seed = Rng::child_seed(seed, fnv1a(h.canonical_repr()));
      Architecture arch = arch_from(h, kind, static_cast<int>(tr.n_features()),
                                    train_ds.k());
      Rng build_rng = Rng::child(eval_seed, 0);
      MlpModel model = build(arch, build_rng);
      TrainConfig cfg =
          train_config_from(h, inner_epochs, Rng::child_seed(eval_seed, 1));
      auto curve = train(model, tr, nullptr, cfg);

      Matrix scores = predict_scores(model, va.features());
      res.roc_auc = safe_roc(scores, va.labels(), train_ds.k());
      res.pr_auc = safe_pr(scores, va.labels(), train_ds.k());
      res.val_loss = eval_loss(model, va.features(), va.labels(), h.weight_decay);
      res.j = -res.roc_auc;
    } catch (const TrainingDivergedError&) {
      res.j = kInf;
      res.roc_auc = kNaN;
      res.pr_auc = kNaN;
      res.val_loss = kInf;
      res.diverged = true;
    }
    return res;
  };
}

FinalFitResult final_fit(const HyperparamVector& h, const DataSplits& splits,
                         ArchKind kind, int final_epochs, std::uint64_t seed) {
  FinalFitResult out;
  Dataset fit_ds = apply_mask(concat_rows(splits.train, splits.val),
                              h.feature_mask);
  Dataset test_ds = apply_mask(splits.test, h.feature_mask);

  Architecture arch = arch_from(h, kind, static_cast<int>(fit_ds.n_features()),
                                splits.train.k());
  Rng build_rng = Rng::child(seed, 0);
  out.model = build(arch, build_rng);
  TrainConfig cfg = train_config_from(h, final_epochs, Rng::child_seed(seed, 1));
  try {
    out.curve = train(out.model, fit_ds, nullptr, cfg);
    Matrix scores = predict_scores(out.model, test_ds.features());
    out.test_roc_auc = safe_roc(scores, test_ds.labels(), splits.train.k());
    out.test_pr_auc = safe_pr(scores, test_ds.labels(), splits.train.k());
    out.test_loss =
        eval_loss(out.model, test_ds.features(), test_ds.labels(),
                  h.weight_decay);
  } catch (const TrainingDivergedError&) {
    out.diverged = true;
    out.test_roc_auc = kNaN;
    out.test_pr_auc = kNaN;
    out.test_loss = kInf;
  }
  return out;
}

}  // namespace qibonn
