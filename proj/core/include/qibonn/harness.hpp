#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qibonn/data.hpp"
#include "qibonn/nn.hpp"
#include "qibonn/optimizer.hpp"

namespace qibonn {

/// Where a run's data comes from: a bundled table, a CSV on disk, or the
/// synthetic generator.
struct DatasetRef {
  std::string kind = "bundled";  // bundled | csv | synth
  std::string name = "diabetes"; // bundled name, or path for kind=csv

  // csv options
  std::string label_column;    // empty -> last column
  std::string positive_label;  // empty -> lexicographically greater class
  std::vector<std::string> categorical;

  // synth shape
  int n = 400;
  int d_informative = 5;
  int d_noise = 15;
  int k = 2;
  std::uint64_t seed = 1;  // dataset seed, independent of the run seed

  void validate() const;
  /// Short human label used in run directory names ("diabetes", "synth",
  /// or the CSV basename).
  std::string label() const;
};

struct RunConfig {
  DatasetRef dataset;
  std::string arch = "shallow";
  OptimizerConfig optimizer;  // its seed field is derived per repeat
  SplitSpec split;            // its seed field is derived per repeat
  int inner_epochs = 5;
  int final_epochs = 10;
  int repeats = 1;
  std::uint64_t seed = 0;  // master seed; all per-repeat seeds derive from it
  std::string output_dir;  // empty -> $QIBONN_OUT or ./runs
  /// bpp overrides by dimension name, applied onto the default space.
  std::vector<std::pair<std::string, int>> space_bpp;

  void validate() const;
};

/// Parse a config JSON document; unknown keys are rejected so typos fail
/// loudly. Throws ConfigError.
RunConfig config_from_json_text(const std::string& text);

/// Serialize with every defaulted field materialized; parsing the result
/// reproduces the config exactly.
std::string config_to_json_text(const RunConfig& cfg);

/// Apply one --set override, e.g. "optimizer.pop_size=6" or
/// "dataset.name=heart". Values parse as JSON scalars when possible, bare
/// strings otherwise. Throws ConfigError for unknown paths.
void apply_override(RunConfig& cfg, const std::string& key_eq_value);

/// Materialize the dataset a config refers to. IngestError on failure.
Dataset load_dataset(const DatasetRef& ref);

/// Search space for a dataset under this config (default space plus any
/// bpp overrides).
SpaceSpec space_for(const RunConfig& cfg, int n_feat);

/// The untuned mid-range baseline candidate: all features, dropout 0.25,
/// width 36, lr 3.16e-3, batch 128, weight decay 1e-4, 2 hidden layers.
HyperparamVector vnn_candidate(int n_feat);

struct RepeatResult {
  int repeat = 0;
  HyperparamVector best_h;
  double best_j = 0.0;
  std::size_t n_evaluations = 0;
  std::vector<EvalRecord> trace;
  FinalFitResult fit;
};

struct RunSummary {
  double mean_test_roc_auc = 0.0;
  double std_test_roc_auc = 0.0;
  double mean_test_pr_auc = 0.0;
  double std_test_pr_auc = 0.0;
  std::size_t total_evaluations = 0;
};

struct RunOutcome {
  RunConfig config;
  std::string method;  // qibonn | vnn | random_search
  std::vector<RepeatResult> repeats;
  RunSummary summary;  // population mean/std over repeats
};

/// repeats x (optimizer run + final fit). Pure compute; writes nothing.
RunOutcome run_tune(const RunConfig& cfg);

/// kind is "vnn" (one final fit per repeat, no search, empty trace) or
/// "random_search" (uniform bitstrings through the same decode/objective
/// path, exactly pop_size*(max_iter+1) evaluations). Repeat seeds derive
/// exactly as in run_tune, so equal master seeds give paired splits.
RunOutcome run_baseline(const RunConfig& cfg, const std::string& kind);

struct SweepCondition {
  NoiseSpec noise;
  std::string name;  // "none" or e.g. "bit_flip_0.005"
  RunOutcome outcome;
};

struct SweepOutcome {
  RunConfig config;
  std::vector<SweepCondition> conditions;  // first is always noiseless
};

/// Default grid: noiseless + bit_flip {.001,.005,.01} + depolarizing
/// {.005,.02} + amplitude_damping {.01,.05}.
std::vector<NoiseSpec> default_noise_grid();

/// One tuning run per condition, identical master seed everywhere so the
/// deltas against the noiseless condition are paired.
SweepOutcome run_noise_sweep(const RunConfig& cfg,
                             const std::vector<NoiseSpec>& grid);

/// Name of the directory a run lands in under the output root.
std::string run_dir_name(const std::string& method, const RunConfig& cfg);

/// Write config.json, report.json, trace.jsonl and curves.csv into dir
/// (created if needed). Deterministic: identical (config, seed) produce
/// byte-identical files; wall-clock data goes to metadata.json only.
void write_run_dir(const std::string& dir, const RunOutcome& outcome);

/// Write sweep.csv (condition,repeat,roc,pr), deltas.csv (per-condition
/// mean and delta vs noiseless) and per-condition run subdirectories.
void write_sweep_dir(const std::string& dir, const SweepOutcome& sweep);

/// metadata.json: timestamps and wall-clock, the one file allowed to
/// differ between identical runs.
void write_metadata(const std::string& dir, const std::string& command,
                    const std::string& started_utc,
                    const std::string& finished_utc, double wall_seconds);

struct ReportOutput {
  std::string summary_markdown;
  std::string summary_csv;
  std::string curves_csv;  // long format: run,repeat,epoch,train_loss
  std::vector<std::string> warnings;
};

/// Merge completed run directories into summary tables. Corrupt or
/// incomplete directories are skipped with a warning. Throws ConfigError
/// if a QIBONN run and a random-search run on the same dataset disagree
/// on evaluation budget (budget parity is asserted, not assumed).
ReportOutput build_report(const std::vector<std::string>& run_dirs);

/// Entry point behind the qibonn binary. Exit codes: 0 success, 2 bad
/// configuration or usage, 3 dataset/split errors.
int cli_main(int argc, char** argv);

}  // namespace qibonn
