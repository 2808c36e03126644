#include "qibonn/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qibonn/errors.hpp"
#include "qibonn/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace qibonn {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

// ----------------------------------------------------------------- config

void DatasetRef::validate() const {
  if (kind != "bundled" && kind != "csv" && kind != "synth")
    throw ConfigError("dataset.kind must be bundled, csv or synth, got '" +
                      kind + "'");
  if (kind != "synth" && name.empty())
    throw ConfigError("dataset.name must not be empty");
  if (kind == "synth") {
    if (n < 3 * k || d_informative < 1 || d_noise < 0 || k < 2)
      throw ConfigError("dataset: bad synth shape (need n >= 3k, "
                        "d_informative >= 1, d_noise >= 0, k >= 2)");
  }
}

std::string DatasetRef::label() const {
  if (kind == "synth") return "synth";
  if (kind == "csv") {
    std::string base = fs::path(name).stem().string();
    return base.empty() ? "csv" : base;
  }
  return name;
}

void RunConfig::validate() const {
  dataset.validate();
  parse_arch(arch);  // throws on unknown names
  optimizer.validate();
  split.validate();
  if (inner_epochs < 1) throw ConfigError("inner_epochs must be >= 1");
  if (final_epochs < 1) throw ConfigError("final_epochs must be >= 1");
  if (repeats < 1) throw ConfigError("repeats must be >= 1");
  for (const auto& [name, bpp] : space_bpp) {
    bool known = std::find(kArchDimNames.begin(), kArchDimNames.end(), name) !=
                 kArchDimNames.end();
    if (!known)
      throw ConfigError("space_bpp: unknown dimension '" + name + "'");
    if (bpp < 1 || bpp > 24)
      throw ConfigError("space_bpp." + name + " must lie in [1,24]");
  }
}

namespace {

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError("unknown config key '" + where + "." + it.key() + "'");
  }
}

template <typename T>
void read_field(const json& j, const char* key, T& out,
                const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config field " + where + "." + key + ": " + e.what());
  }
}

json dataset_to_json(const DatasetRef& d) {
  return json{{"kind", d.kind},
              {"name", d.name},
              {"label_column", d.label_column},
              {"positive_label", d.positive_label},
              {"categorical", d.categorical},
              {"n", d.n},
              {"d_informative", d.d_informative},
              {"d_noise", d.d_noise},
              {"k", d.k},
              {"seed", d.seed}};
}

DatasetRef dataset_from_json(const json& j) {
  check_keys(j, "dataset",
             {"kind", "name", "label_column", "positive_label", "categorical",
              "n", "d_informative", "d_noise", "k", "seed"});
  DatasetRef d;
  read_field(j, "kind", d.kind, "dataset");
  read_field(j, "name", d.name, "dataset");
  read_field(j, "label_column", d.label_column, "dataset");
  read_field(j, "positive_label", d.positive_label, "dataset");
  read_field(j, "categorical", d.categorical, "dataset");
  read_field(j, "n", d.n, "dataset");
  read_field(j, "d_informative", d.d_informative, "dataset");
  read_field(j, "d_noise", d.d_noise, "dataset");
  read_field(j, "k", d.k, "dataset");
  read_field(j, "seed", d.seed, "dataset");
  return d;
}

json optimizer_to_json(const OptimizerConfig& o) {
  return json{{"pop_size", o.pop_size},
              {"max_iter", o.max_iter},
              {"alpha_step", o.alpha_step},
              {"p_mut", o.p_mut},
              {"theta_max", o.theta_max},
              {"theta_clip", o.theta_clip},
              {"n_threads", o.n_threads},
              {"noise",
               {{"kind", to_string(o.noise.kind)},
                {"strength", o.noise.strength}}}};
}

OptimizerConfig optimizer_from_json(const json& j) {
  check_keys(j, "optimizer",
             {"pop_size", "max_iter", "alpha_step", "p_mut", "theta_max",
              "theta_clip", "n_threads", "noise"});
  OptimizerConfig o;
  read_field(j, "pop_size", o.pop_size, "optimizer");
  read_field(j, "max_iter", o.max_iter, "optimizer");
  read_field(j, "alpha_step", o.alpha_step, "optimizer");
  read_field(j, "p_mut", o.p_mut, "optimizer");
  read_field(j, "theta_max", o.theta_max, "optimizer");
  read_field(j, "theta_clip", o.theta_clip, "optimizer");
  read_field(j, "n_threads", o.n_threads, "optimizer");
  if (j.contains("noise")) {
    const json& nj = j.at("noise");
    check_keys(nj, "optimizer.noise", {"kind", "strength"});
    std::string kind = "none";
    double strength = 0.0;
    read_field(nj, "kind", kind, "optimizer.noise");
    read_field(nj, "strength", strength, "optimizer.noise");
    o.noise = NoiseSpec::parse(kind, strength);
  }
  return o;
}

json split_to_json(const SplitSpec& s) {
  return json{{"train_frac", s.train_frac},
              {"val_frac", s.val_frac},
              {"test_frac", s.test_frac},
              {"stratified", s.stratified}};
}

SplitSpec split_from_json(const json& j) {
  check_keys(j, "split", {"train_frac", "val_frac", "test_frac", "stratified"});
  SplitSpec s;
  read_field(j, "train_frac", s.train_frac, "split");
  read_field(j, "val_frac", s.val_frac, "split");
  read_field(j, "test_frac", s.test_frac, "split");
  read_field(j, "stratified", s.stratified, "split");
  return s;
}

json config_to_json(const RunConfig& cfg) {
  // Materialize the effective bpp of every architecture dimension so the
  // persisted copy is self-contained.
  SpaceSpec space = space_for(cfg, 1);
  json bpp = json::object();
  for (const auto& name : kArchDimNames)
    bpp[name] = space.dim_named(name).bpp;

  return json{{"dataset", dataset_to_json(cfg.dataset)},
              {"arch", cfg.arch},
              {"optimizer", optimizer_to_json(cfg.optimizer)},
              {"split", split_to_json(cfg.split)},
              {"inner_epochs", cfg.inner_epochs},
              {"final_epochs", cfg.final_epochs},
              {"repeats", cfg.repeats},
              {"seed", cfg.seed},
              {"output_dir", cfg.output_dir},
              {"space_bpp", bpp}};
}

RunConfig config_from_json(const json& j, bool validate = true) {
  check_keys(j, "config",
             {"dataset", "arch", "optimizer", "split", "inner_epochs",
              "final_epochs", "repeats", "seed", "output_dir", "space_bpp"});
  RunConfig cfg;
  if (j.contains("dataset")) cfg.dataset = dataset_from_json(j.at("dataset"));
  read_field(j, "arch", cfg.arch, "config");
  if (j.contains("optimizer"))
    cfg.optimizer = optimizer_from_json(j.at("optimizer"));
  if (j.contains("split")) cfg.split = split_from_json(j.at("split"));
  read_field(j, "inner_epochs", cfg.inner_epochs, "config");
  read_field(j, "final_epochs", cfg.final_epochs, "config");
  read_field(j, "repeats", cfg.repeats, "config");
  read_field(j, "seed", cfg.seed, "config");
  read_field(j, "output_dir", cfg.output_dir, "config");
  if (j.contains("space_bpp")) {
    const json& bj = j.at("space_bpp");
    if (!bj.is_object())
      throw ConfigError("space_bpp must be an object of name -> bits");
    for (auto it = bj.begin(); it != bj.end(); ++it) {
      if (!it.value().is_number_integer())
        throw ConfigError("space_bpp." + it.key() + " must be an integer");
      cfg.space_bpp.emplace_back(it.key(), it.value().get<int>());
    }
  }
  if (validate) cfg.validate();
  return cfg;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

}  // namespace

RunConfig config_from_json_text(const std::string& text) {
  return config_from_json(parse_json_text(text, "config"));
}

std::string config_to_json_text(const RunConfig& cfg) {
  return config_to_json(cfg).dump(2) + "\n";
}

void apply_override(RunConfig& cfg, const std::string& key_eq_value) {
  auto eq = key_eq_value.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got '" + key_eq_value + "'");
  std::string path = key_eq_value.substr(0, eq);
  std::string value = key_eq_value.substr(eq + 1);

  json j = config_to_json(cfg);
  json* node = &j;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = path.find('.', start);
    std::string key = path.substr(start, dot - start);
    if (key.empty())
      throw ConfigError("--set: empty key segment in '" + path + "'");
    if (dot == std::string::npos) {
      json parsed;
      try {
        parsed = json::parse(value);
      } catch (const json::exception&) {
        parsed = value;  // bare strings are fine
      }
      (*node)[key] = parsed;
      break;
    }
    if (!node->contains(key)) (*node)[key] = json::object();
    node = &(*node)[key];
    if (!node->is_object())
      throw ConfigError("--set: '" + key + "' is not an object");
    start = dot + 1;
  }
  // Round-tripping through the parser reuses the unknown-key and type
  // checks, so a typo'd path fails here instead of being ignored. Range
  // validation is deferred: a single --set may leave the config mid-edit
  // (e.g. one split fraction changed), and callers validate the final
  // config once all overrides are in.
  cfg = config_from_json(j, /*validate=*/false);
}

// ---------------------------------------------------------------- running

Dataset load_dataset(const DatasetRef& ref) {
  ref.validate();
  if (ref.kind == "bundled") return load_bundled(ref.name);
  if (ref.kind == "synth")
    return synthesize(ref.n, ref.d_informative, ref.d_noise, ref.k, ref.seed);
  LoadOptions opt;
  opt.label_column = ref.label_column;
  opt.positive_label = ref.positive_label;
  opt.categorical = ref.categorical;
  return load_csv(ref.name, opt);
}

SpaceSpec space_for(const RunConfig& cfg, int n_feat) {
  SpaceSpec space = default_space(n_feat);
  for (const auto& [name, bpp] : cfg.space_bpp) {
    bool found = false;
    for (auto& dim : space.dims) {
      if (dim.name == name) {
        dim.bpp = bpp;
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("space_bpp: unknown dimension '" + name + "'");
  }
  space.validate();
  return space;
}

HyperparamVector vnn_candidate(int n_feat) {
  HyperparamVector h;
  h.feature_mask.assign(n_feat, 1);
  h.dropout = 0.25;
  h.hidden_width = 36;
  h.learning_rate = 3.16e-3;
  h.batch_size = 128;
  h.weight_decay = 1e-4;
  h.n_hidden_layers = 2;
  return h;
}

namespace {

struct RepeatSeeds {
  std::uint64_t split;
  std::uint64_t optimizer;
  std::uint64_t objective;
  std::uint64_t final_fit;
};

RepeatSeeds seeds_for(std::uint64_t master, int repeat) {
  std::uint64_t r = Rng::child_seed(master, static_cast<std::uint64_t>(repeat));
  return {Rng::child_seed(r, 0), Rng::child_seed(r, 1), Rng::child_seed(r, 2),
          Rng::child_seed(r, 3)};
}

void summarize(RunOutcome& out) {
  std::size_t n = out.repeats.size();
  double mroc = 0.0, mpr = 0.0;
  out.summary.total_evaluations = 0;
  for (const auto& r : out.repeats) {
    mroc += r.fit.test_roc_auc;
    mpr += r.fit.test_pr_auc;
    out.summary.total_evaluations += r.n_evaluations;
  }
  mroc /= static_cast<double>(n);
  mpr /= static_cast<double>(n);
  double vroc = 0.0, vpr = 0.0;
  for (const auto& r : out.repeats) {
    vroc += (r.fit.test_roc_auc - mroc) * (r.fit.test_roc_auc - mroc);
    vpr += (r.fit.test_pr_auc - mpr) * (r.fit.test_pr_auc - mpr);
  }
  out.summary.mean_test_roc_auc = mroc;
  out.summary.mean_test_pr_auc = mpr;
  out.summary.std_test_roc_auc = std::sqrt(vroc / static_cast<double>(n));
  out.summary.std_test_pr_auc = std::sqrt(vpr / static_cast<double>(n));
}

}  // namespace

RunOutcome run_tune(const RunConfig& cfg) {
  cfg.validate();
  ArchKind kind = parse_arch(cfg.arch);
  Dataset ds = load_dataset(cfg.dataset);
  SpaceSpec space = space_for(cfg, static_cast<int>(ds.n_features()));

  RunOutcome out;
  out.config = cfg;
  out.method = "qibonn";
  for (int r = 0; r < cfg.repeats; ++r) {
    RepeatSeeds seeds = seeds_for(cfg.seed, r);
    SplitSpec split_spec = cfg.split;
    split_spec.seed = seeds.split;
    DataSplits splits = split(ds, split_spec);

    Objective obj = make_objective(splits.train, splits.val, kind,
                                   cfg.inner_epochs, seeds.objective);
    OptimizerConfig opt = cfg.optimizer;
    opt.seed = seeds.optimizer;
    RunResult res = run(space, obj, opt);

    RepeatResult rr;
    rr.repeat = r;
    rr.best_h = res.best_h;
    rr.best_j = res.best_fitness;
    rr.n_evaluations = res.trace.size();
    rr.trace = std::move(res.trace);
    rr.fit = final_fit(res.best_h, splits, kind, cfg.final_epochs,
                       seeds.final_fit);
    out.repeats.push_back(std::move(rr));
  }
  summarize(out);
  return out;
}

RunOutcome run_baseline(const RunConfig& cfg, const std::string& baseline) {
  cfg.validate();
  if (baseline != "vnn" && baseline != "random_search")
    throw ConfigError("baseline kind must be vnn or random_search, got '" +
                      baseline + "'");
  ArchKind kind = parse_arch(cfg.arch);
  Dataset ds = load_dataset(cfg.dataset);
  SpaceSpec space = space_for(cfg, static_cast<int>(ds.n_features()));

  RunOutcome out;
  out.config = cfg;
  out.method = baseline;
  for (int r = 0; r < cfg.repeats; ++r) {
    RepeatSeeds seeds = seeds_for(cfg.seed, r);
    SplitSpec split_spec = cfg.split;
    split_spec.seed = seeds.split;
    DataSplits splits = split(ds, split_spec);

    RepeatResult rr;
    rr.repeat = r;
    if (baseline == "vnn") {
      rr.best_h = vnn_candidate(static_cast<int>(ds.n_features()));
      rr.best_j = kNaN;
      rr.n_evaluations = 0;
    } else {
      // Same budget, same decode, same objective; only the proposal
      // distribution differs (uniform bits instead of the swarm).
      Objective obj = make_objective(splits.train, splits.val, kind,
                                     cfg.inner_epochs, seeds.objective);
      std::size_t budget = static_cast<std::size_t>(cfg.optimizer.pop_size) *
                           (static_cast<std::size_t>(cfg.optimizer.max_iter) + 1);
      Rng rng(seeds.optimizer);
      std::size_t n_bits = space.total_bits();
      double best_j = std::numeric_limits<double>::infinity();
      for (std::size_t e = 0; e < budget; ++e) {
        BitString bits(n_bits);
        for (auto& b : bits) b = rng.bernoulli(0.5) ? 1 : 0;
        HyperparamVector h = decode(bits, space);
        ObjectiveResult obr;
        try {
          obr = obj(h);
        } catch (const std::exception&) {
          obr.j = std::numeric_limits<double>::infinity();
          obr.roc_auc = kNaN;
          obr.pr_auc = kNaN;
          obr.val_loss = std::numeric_limits<double>::infinity();
          obr.diverged = true;
        }
        int it = static_cast<int>(e / cfg.optimizer.pop_size);
        int pid = static_cast<int>(e % cfg.optimizer.pop_size);
        rr.trace.push_back({it, pid, bits, h, obr});
        if (obr.j < best_j) {
          best_j = obr.j;
          rr.best_h = h;
        }
      }
      rr.best_j = best_j;
      rr.n_evaluations = rr.trace.size();
    }
    rr.fit = final_fit(rr.best_h, splits, kind, cfg.final_epochs,
                       seeds.final_fit);
    out.repeats.push_back(std::move(rr));
  }
  summarize(out);
  return out;
}

std::vector<NoiseSpec> default_noise_grid() {
  return {
      NoiseSpec::none(),
      NoiseSpec::make(NoiseKind::BitFlip, 0.001),
      NoiseSpec::make(NoiseKind::BitFlip, 0.005),
      NoiseSpec::make(NoiseKind::BitFlip, 0.01),
      NoiseSpec::make(NoiseKind::Depolarizing, 0.005),
      NoiseSpec::make(NoiseKind::Depolarizing, 0.02),
      NoiseSpec::make(NoiseKind::AmplitudeDamping, 0.01),
      NoiseSpec::make(NoiseKind::AmplitudeDamping, 0.05),
  };
}

namespace {

std::string condition_name(const NoiseSpec& spec) {
  if (!spec.enabled()) return "none";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s_%g", to_string(spec.kind).c_str(),
                spec.strength);
  return buf;
}

}  // namespace

SweepOutcome run_noise_sweep(const RunConfig& cfg,
                             const std::vector<NoiseSpec>& grid) {
  cfg.validate();
  SweepOutcome sweep;
  sweep.config = cfg;

  // Noiseless always runs, and always first, so deltas have a reference.
  std::vector<NoiseSpec> conditions;
  conditions.push_back(NoiseSpec::none());
  for (const NoiseSpec& spec : grid)
    if (spec.enabled()) conditions.push_back(spec);

  for (const NoiseSpec& spec : conditions) {
    RunConfig cond_cfg = cfg;
    cond_cfg.optimizer.noise = spec;
    SweepCondition cond;
    cond.noise = spec;
    cond.name = condition_name(spec);
    cond.outcome = run_tune(cond_cfg);
    sweep.conditions.push_back(std::move(cond));
  }
  return sweep;
}

// ---------------------------------------------------------------- writing

namespace {

json h_to_json(const HyperparamVector& h) {
  return json{{"feature_mask", bits_to_string(h.feature_mask)},
              {"dropout", h.dropout},
              {"hidden_width", h.hidden_width},
              {"learning_rate", h.learning_rate},
              {"batch_size", h.batch_size},
              {"weight_decay", h.weight_decay},
              {"n_hidden_layers", h.n_hidden_layers}};
}

json trace_line(const EvalRecord& rec) {
  return json{{"iteration", rec.iteration},
              {"particle", rec.particle},
              {"bits", bits_to_string(rec.bits)},
              {"h", h_to_json(rec.h)},
              {"j", rec.result.j},
              {"metrics",
               {{"roc_auc", rec.result.roc_auc},
                {"pr_auc", rec.result.pr_auc},
                {"val_loss", rec.result.val_loss}}},
              {"error", rec.result.diverged}};
}

json report_to_json(const RunOutcome& out) {
  json repeats = json::array();
  for (const auto& r : out.repeats) {
    repeats.push_back(json{{"repeat", r.repeat},
                           {"best_h", h_to_json(r.best_h)},
                           {"best_j", r.best_j},
                           {"n_evaluations", r.n_evaluations},
                           {"test_roc_auc", r.fit.test_roc_auc},
                           {"test_pr_auc", r.fit.test_pr_auc},
                           {"test_loss", r.fit.test_loss},
                           {"diverged", r.fit.diverged}});
  }
  return json{{"config", config_to_json(out.config)},
              {"method", out.method},
              {"repeats", repeats},
              {"summary",
               {{"mean_test_roc_auc", out.summary.mean_test_roc_auc},
                {"std_test_roc_auc", out.summary.std_test_roc_auc},
                {"mean_test_pr_auc", out.summary.mean_test_pr_auc},
                {"std_test_pr_auc", out.summary.std_test_pr_auc},
                {"total_evaluations", out.summary.total_evaluations}}}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string run_dir_name(const std::string& method, const RunConfig& cfg) {
  return method + "-" + cfg.dataset.label() + "-seed" +
         std::to_string(cfg.seed);
}

void write_run_dir(const std::string& dir, const RunOutcome& outcome) {
  fs::create_directories(dir);
  write_text(fs::path(dir) / "config.json", config_to_json_text(outcome.config));
  write_text(fs::path(dir) / "report.json",
             report_to_json(outcome).dump(2) + "\n");

  std::ostringstream trace;
  for (const auto& r : outcome.repeats)
    for (const auto& rec : r.trace) trace << trace_line(rec).dump() << "\n";
  write_text(fs::path(dir) / "trace.jsonl", trace.str());

  std::ostringstream curves;
  curves << "repeat,epoch,train_loss\n";
  for (const auto& r : outcome.repeats)
    for (const auto& pt : r.fit.curve)
      curves << r.repeat << "," << pt.epoch << ","
             << format_double(pt.train_loss) << "\n";
  write_text(fs::path(dir) / "curves.csv", curves.str());
}

void write_sweep_dir(const std::string& dir, const SweepOutcome& sweep) {
  fs::create_directories(dir);

  std::ostringstream rows;
  rows << "condition,repeat,test_roc_auc,test_pr_auc\n";
  for (const auto& cond : sweep.conditions)
    for (const auto& r : cond.outcome.repeats)
      rows << cond.name << "," << r.repeat << ","
           << format_double(r.fit.test_roc_auc) << ","
           << format_double(r.fit.test_pr_auc) << "\n";
  write_text(fs::path(dir) / "sweep.csv", rows.str());

  double base = sweep.conditions.empty()
                    ? kNaN
                    : sweep.conditions.front().outcome.summary.mean_test_roc_auc;
  std::ostringstream deltas;
  deltas << "condition,mean_test_roc_auc,delta_vs_noiseless\n";
  for (const auto& cond : sweep.conditions)
    deltas << cond.name << ","
           << format_double(cond.outcome.summary.mean_test_roc_auc) << ","
           << format_double(cond.outcome.summary.mean_test_roc_auc - base)
           << "\n";
  write_text(fs::path(dir) / "deltas.csv", deltas.str());

  for (const auto& cond : sweep.conditions)
    write_run_dir((fs::path(dir) / cond.name).string(), cond.outcome);
}

void write_metadata(const std::string& dir, const std::string& command,
                    const std::string& started_utc,
                    const std::string& finished_utc, double wall_seconds) {
  fs::create_directories(dir);
  json meta{{"command", command},
            {"started_utc", started_utc},
            {"finished_utc", finished_utc},
            {"wall_clock_seconds", wall_seconds}};
  write_text(fs::path(dir) / "metadata.json", meta.dump(2) + "\n");
}

// --------------------------------------------------------------- reporting

namespace {

struct LoadedRun {
  std::string dir;
  json report;
};

// Counts trace records, rejecting half-written lines (a killed run can
// truncate the file mid-record).
std::size_t trace_record_count(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::size_t n = 0;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    if (!json::accept(line))
      throw std::runtime_error("trace.jsonl line " + std::to_string(n + 1) +
                               " is not valid JSON");
    ++n;
  }
  return n;
}

}  // namespace

ReportOutput build_report(const std::vector<std::string>& run_dirs) {
  ReportOutput out;
  std::vector<LoadedRun> runs;

  for (const std::string& dir : run_dirs) {
    fs::path report_path = fs::path(dir) / "report.json";
    fs::path trace_path = fs::path(dir) / "trace.jsonl";
    try {
      std::ifstream f(report_path, std::ios::binary);
      if (!f) throw std::runtime_error("missing report.json");
      std::ostringstream buf;
      buf << f.rdbuf();
      json report = json::parse(buf.str());
      std::size_t expect = report.at("summary").at("total_evaluations");
      if (!fs::exists(trace_path))
        throw std::runtime_error("missing trace.jsonl");
      std::size_t lines = trace_record_count(trace_path);
      if (lines != expect)
        throw std::runtime_error("trace.jsonl has " + std::to_string(lines) +
                                 " records, report expects " +
                                 std::to_string(expect));
      runs.push_back({dir, std::move(report)});
    } catch (const std::exception& e) {
      out.warnings.push_back("skipping " + dir + ": " + e.what());
    }
  }

  // Budget parity: QIBONN and random search must have spent identical
  // evaluation budgets when compared on the same dataset.
  for (const auto& a : runs) {
    for (const auto& b : runs) {
      if (a.report.at("method") != "qibonn" ||
          b.report.at("method") != "random_search")
        continue;
      if (a.report.at("config").at("dataset") !=
          b.report.at("config").at("dataset"))
        continue;
      std::size_t ea = a.report.at("summary").at("total_evaluations");
      std::size_t eb = b.report.at("summary").at("total_evaluations");
      if (ea != eb)
        throw ConfigError("budget parity violated: " + a.dir + " used " +
                          std::to_string(ea) + " evaluations but " + b.dir +
                          " used " + std::to_string(eb));
    }
  }

  std::ostringstream md, csv, curves;
  md << "| method | dataset | repeats | test ROC-AUC (mean +/- std) | "
        "test PR-AUC (mean +/- std) | evaluations |\n";
  md << "|---|---|---|---|---|---|\n";
  csv << "method,dataset,repeats,mean_test_roc_auc,std_test_roc_auc,"
         "mean_test_pr_auc,std_test_pr_auc,total_evaluations\n";
  curves << "run,repeat,epoch,train_loss\n";

  for (const auto& run : runs) {
    const json& r = run.report;
    const json& s = r.at("summary");
    std::string dataset = r.at("config").at("dataset").at("kind") == "synth"
                              ? "synth"
                              : r.at("config").at("dataset").at("name")
                                    .get<std::string>();
    std::size_t repeats = r.at("repeats").size();
    char mdrow[256];
    std::snprintf(mdrow, sizeof(mdrow),
                  "| %s | %s | %zu | %.4f +/- %.4f | %.4f +/- %.4f | %zu |\n",
                  r.at("method").get<std::string>().c_str(), dataset.c_str(),
                  repeats, s.at("mean_test_roc_auc").get<double>(),
                  s.at("std_test_roc_auc").get<double>(),
                  s.at("mean_test_pr_auc").get<double>(),
                  s.at("std_test_pr_auc").get<double>(),
                  s.at("total_evaluations").get<std::size_t>());
    md << mdrow;
    csv << r.at("method").get<std::string>() << "," << dataset << ","
        << repeats << ","
        << format_double(s.at("mean_test_roc_auc").get<double>()) << ","
        << format_double(s.at("std_test_roc_auc").get<double>()) << ","
        << format_double(s.at("mean_test_pr_auc").get<double>()) << ","
        << format_double(s.at("std_test_pr_auc").get<double>()) << ","
        << s.at("total_evaluations").get<std::size_t>() << "\n";

    std::string run_name = fs::path(run.dir).filename().string();
    std::ifstream cf(fs::path(run.dir) / "curves.csv");
    std::string line;
    bool header = true;
    while (std::getline(cf, line)) {
      if (header) {
        header = false;
        continue;
      }
      if (!line.empty()) curves << run_name << "," << line << "\n";
    }
  }

  out.summary_markdown = md.str();
  out.summary_csv = csv.str();
  out.curves_csv = curves.str();
  return out;
}

// --------------------------------------------------------------------- CLI

namespace {

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string resolve_out_root(const RunConfig& cfg, const std::string& flag) {
  if (!flag.empty()) return flag;
  if (!cfg.output_dir.empty()) return cfg.output_dir;
  if (const char* env = std::getenv("QIBONN_OUT"); env && *env) return env;
  return "runs";
}

void set_dataset_flag(RunConfig& cfg, const std::string& value) {
  for (const std::string& name : bundled_names()) {
    if (value == name) {
      cfg.dataset = DatasetRef{};
      cfg.dataset.kind = "bundled";
      cfg.dataset.name = name;
      return;
    }
  }
  if (value == "synth") {
    DatasetRef ref;
    ref.kind = "synth";
    ref.name = "";
    cfg.dataset = ref;
    return;
  }
  if (value.find('/') != std::string::npos ||
      (value.size() > 4 && value.substr(value.size() - 4) == ".csv")) {
    DatasetRef ref;
    ref.kind = "csv";
    ref.name = value;
    cfg.dataset = ref;
    return;
  }
  throw ConfigError("--dataset expects a bundled name (diabetes, heart), "
                    "'synth', or a CSV path, got '" + value + "'");
}

struct CommonFlags {
  std::string config_path;
  std::string dataset;
  std::string arch;
  std::string out;
  std::vector<std::string> overrides;
  std::int64_t seed = -1;
  int repeats = -1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Config JSON path");
    cmd->add_option("--seed", seed, "Master seed");
    cmd->add_option("--dataset", dataset,
                    "Bundled name, 'synth', or CSV path");
    cmd->add_option("--arch", arch, "shallow, deep or res");
    cmd->add_option("--repeats", repeats, "Independent repeats");
    cmd->add_option("--out", out, "Output root directory");
    cmd->add_option("--set", overrides,
                    "Dotted config override, e.g. optimizer.pop_size=6");
  }

  RunConfig build() const {
    RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream f(config_path, std::ios::binary);
      if (!f) throw ConfigError("cannot open config '" + config_path + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      cfg = config_from_json_text(buf.str());
    }
    if (!dataset.empty()) set_dataset_flag(cfg, dataset);
    if (!arch.empty()) cfg.arch = arch;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (repeats >= 0) cfg.repeats = repeats;
    for (const std::string& kv : overrides) apply_override(cfg, kv);
    cfg.validate();
    return cfg;
  }
};

void print_summary(const RunOutcome& out, const std::string& dir) {
  std::printf("%s: %d repeat(s), mean test ROC-AUC %.4f (std %.4f), "
              "mean test PR-AUC %.4f, %zu evaluations\n",
              out.method.c_str(), static_cast<int>(out.repeats.size()),
              out.summary.mean_test_roc_auc, out.summary.std_test_roc_auc,
              out.summary.mean_test_pr_auc, out.summary.total_evaluations);
  std::printf("results: %s\n", dir.c_str());
}

int dispatch(int argc, char** argv) {
  CLI::App app{"QIBONN: quantum-inspired bilevel optimization of neural "
               "networks for tabular classification"};
  app.require_subcommand(1);

  CLI::App* tune = app.add_subcommand("tune", "Run the QIBONN tuner");
  CommonFlags tune_flags;
  tune_flags.add_to(tune);

  CLI::App* baseline =
      app.add_subcommand("baseline", "Run a baseline (vnn or random_search)");
  CommonFlags base_flags;
  std::string baseline_kind;
  baseline->add_option("kind", baseline_kind, "vnn or random_search")
      ->required();
  base_flags.add_to(baseline);

  CLI::App* sweep = app.add_subcommand(
      "noise-sweep", "Tune under each noise condition in the default grid");
  CommonFlags sweep_flags;
  sweep_flags.add_to(sweep);

  CLI::App* report =
      app.add_subcommand("report", "Summarize completed run directories");
  std::vector<std::string> report_dirs;
  std::string report_out;
  report->add_option("dirs", report_dirs, "Run directories")->required();
  report->add_option("--out", report_out, "Where to write the summary");

  CLI11_PARSE(app, argc, argv);

  if (tune->parsed()) {
    RunConfig cfg = tune_flags.build();
    std::string started = now_utc();
    auto t0 = std::chrono::steady_clock::now();
    RunOutcome out = run_tune(cfg);
    auto t1 = std::chrono::steady_clock::now();
    std::string dir = (fs::path(resolve_out_root(cfg, tune_flags.out)) /
                       run_dir_name(out.method, cfg)).string();
    write_run_dir(dir, out);
    write_metadata(dir, "tune", started, now_utc(),
                   std::chrono::duration<double>(t1 - t0).count());
    print_summary(out, dir);
    return 0;
  }

  if (baseline->parsed()) {
    RunConfig cfg = base_flags.build();
    std::string started = now_utc();
    auto t0 = std::chrono::steady_clock::now();
    RunOutcome out = run_baseline(cfg, baseline_kind);
    auto t1 = std::chrono::steady_clock::now();
    std::string dir =
        (fs::path(resolve_out_root(cfg, base_flags.out)) /
         run_dir_name(out.method, cfg)).string();
    write_run_dir(dir, out);
    write_metadata(dir, "baseline " + baseline_kind, started, now_utc(),
                   std::chrono::duration<double>(t1 - t0).count());
    print_summary(out, dir);
    return 0;
  }

  if (sweep->parsed()) {
    RunConfig cfg = sweep_flags.build();
    std::string started = now_utc();
    auto t0 = std::chrono::steady_clock::now();
    SweepOutcome out = run_noise_sweep(cfg, default_noise_grid());
    auto t1 = std::chrono::steady_clock::now();
    std::string dir = (fs::path(resolve_out_root(cfg, sweep_flags.out)) /
                       run_dir_name("noise-sweep", cfg)).string();
    write_sweep_dir(dir, out);
    write_metadata(dir, "noise-sweep", started, now_utc(),
                   std::chrono::duration<double>(t1 - t0).count());
    for (const auto& cond : out.conditions)
      std::printf("%-24s mean test ROC-AUC %.4f\n", cond.name.c_str(),
                  cond.outcome.summary.mean_test_roc_auc);
    std::printf("results: %s\n", dir.c_str());
    return 0;
  }

  // report
  ReportOutput rep = build_report(report_dirs);
  for (const std::string& w : rep.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::string dir = report_out.empty() ? "report" : report_out;
  fs::create_directories(dir);
  write_text(fs::path(dir) / "summary.md", rep.summary_markdown);
  write_text(fs::path(dir) / "summary.csv", rep.summary_csv);
  write_text(fs::path(dir) / "curves_long.csv", rep.curves_csv);
  std::fputs(rep.summary_markdown.c_str(), stdout);
  std::printf("results: %s\n", dir.c_str());
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IngestError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const SplitError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace qibonn
