#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qibonn/data.hpp"
#include "qibonn/encoding.hpp"
#include "qibonn/matrix.hpp"
#include "qibonn/rng.hpp"

namespace qibonn {

enum class ArchKind { Shallow, Deep, Res };

std::string to_string(ArchKind kind);
ArchKind parse_arch(const std::string& name);  // ConfigError on unknown name

struct Architecture {
  ArchKind kind = ArchKind::Shallow;
  int input_dim = 0;
  int hidden_width = 0;
  int n_hidden_layers = 1;
  int output_dim = 1;  // 1 for binary (sigmoid head), K for multiclass
  double dropout_p = 0.0;

  /// Shallow always has exactly one hidden layer; the decoded layer count
  /// only matters for the deep and residual variants.
  int effective_hidden_layers() const {
    return kind == ArchKind::Shallow ? 1 : n_hidden_layers;
  }
  void validate() const;
};

struct Layer {
  Matrix w;  // (fan_in x fan_out)
  std::vector<double> b;
};

/// Layer layout by kind:
///   Shallow: [hidden, head]
///   Deep:    [hidden_0 .. hidden_{L-1}, head]
///   Res:     [proj, block_0_a, block_0_b, .., block_{L-1}_b, head]
/// Residual blocks are width-preserving pairs; the block input is added to
/// the block output before the next activation.
struct MlpModel {
  Architecture arch;
  std::vector<Layer> layers;
};

/// Uniform He-style fan-in init (bound sqrt(6/fan_in)), zero biases.
MlpModel build(const Architecture& arch, Rng& rng);

/// Eval-mode forward pass: ReLU hidden activations, no dropout, raw logits.
Matrix forward(const MlpModel& m, const Matrix& x);

/// Train-mode forward pass: inverted dropout (scale 1/(1-p)) after every
/// ReLU. Exposed for the dropout-expectation property.
Matrix forward_train(const MlpModel& m, const Matrix& x, Rng& rng);

/// Class scores for metrics: sigmoid probability column (binary) or
/// softmax rows (multiclass).
Matrix predict_scores(const MlpModel& m, const Matrix& x);

struct TrainConfig {
  double learning_rate = 0.0;
  int batch_size = 0;
  double weight_decay = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
  double momentum = 0.9;

  void validate() const;
};

struct Grads {
  std::vector<Layer> layers;  // same shapes as the model
};

struct LossGrad {
  double loss = 0.0;
  Grads grads;
};

/// Mean cross-entropy over the batch (sigmoid BCE for output_dim 1,
/// softmax CE otherwise; logits clamped to +-30 inside the loss) plus
/// (weight_decay/2)*sum||W||^2 over weights only, with exact backprop
/// gradients. Throws TrainingDivergedError when the loss is not finite.
LossGrad loss_and_grad(const MlpModel& m, const Matrix& x,
                       std::span<const int> labels, double weight_decay,
                       bool train_mode, Rng& rng);

/// Cross-entropy + L2 evaluated without gradients (eval mode).
double eval_loss(const MlpModel& m, const Matrix& x,
                 std::span<const int> labels, double weight_decay);

struct EpochPoint {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;  // NaN when no validation set is given
};

/// Shuffled mini-batch SGD with momentum, in place. Returns the per-epoch
/// loss curve. Throws TrainingDivergedError on NaN/Inf loss.
std::vector<EpochPoint> train(MlpModel& m, const Dataset& train_ds,
                              const Dataset* val_ds, const TrainConfig& cfg);

struct ObjectiveResult {
  double j = 0.0;  // -validation ROC-AUC, or +inf on divergence
  double roc_auc = 0.0;
  double pr_auc = 0.0;
  double val_loss = 0.0;
  bool diverged = false;
};

using Objective = std::function<ObjectiveResult(const HyperparamVector&)>;

/// The lower-level problem as a black box: mask features, build the
/// architecture decoded from h, train inner_epochs on the train split,
/// score validation ROC-AUC M(h), return J = -M. Evaluation randomness is
/// keyed on (seed, h), so the same candidate always gets the same J no
/// matter when or where it is evaluated. Training divergence is folded
/// into J = +inf rather than raised.
Objective make_objective(const Dataset& train, const Dataset& val,
                         ArchKind kind, int inner_epochs, std::uint64_t seed);

struct FinalFitResult {
  MlpModel model;
  double test_roc_auc = 0.0;
  double test_pr_auc = 0.0;
  double test_loss = 0.0;
  bool diverged = false;
  std::vector<EpochPoint> curve;
};

/// Train the decoded architecture on train+validation for final_epochs and
/// evaluate on the held-out test partition. Divergence is reported in the
/// result, not thrown.
FinalFitResult final_fit(const HyperparamVector& h, const DataSplits& splits,
                         ArchKind kind, int final_epochs, std::uint64_t seed);

/// Architecture decoded from a candidate for a dataset with n features
/// (after masking) and k classes.
Architecture arch_from(const HyperparamVector& h, ArchKind kind,
                       int masked_dim, int k);

}  // namespace qibonn
