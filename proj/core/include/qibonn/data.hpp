#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qibonn/matrix.hpp"

namespace qibonn {

struct ColumnStats {
  double mean = 0.0;
  double std = 1.0;
};

/// An immutable, fully numeric dataset: standardized feature matrix plus
/// integer labels 0..k-1. Feature reads go through features(), which bumps
/// a shared access counter; tests use the counter to prove that tuning
/// never touches the held-out test partition.
class Dataset {
 public:
  Dataset() = default;
  Dataset(Matrix x, std::vector<int> labels, int k,
          std::vector<std::string> feature_names);

  std::size_t n_rows() const { return labels_.size(); }
  std::size_t n_features() const { return x_.cols(); }
  int k() const { return k_; }

  const Matrix& features() const {
    if (access_count_) access_count_->fetch_add(1, std::memory_order_relaxed);
    return x_;
  }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }

  const std::vector<ColumnStats>& standardization() const {
    return standardization_;
  }
  void set_standardization(std::vector<ColumnStats> s) {
    standardization_ = std::move(s);
  }

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  const std::vector<std::string>& class_names() const { return class_names_; }
  void set_class_names(std::vector<std::string> names) {
    class_names_ = std::move(names);
  }

  /// Column indices known to carry label signal (synthetic datasets only).
  const std::vector<int>& informative() const { return informative_; }
  void set_informative(std::vector<int> idx) { informative_ = std::move(idx); }

  std::uint64_t feature_access_count() const {
    return access_count_ ? access_count_->load() : 0;
  }

 private:
  Matrix x_;
  std::vector<int> labels_;
  int k_ = 0;
  std::vector<std::string> feature_names_;
  std::vector<ColumnStats> standardization_;
  std::vector<std::string> warnings_;
  std::vector<std::string> class_names_;
  std::vector<int> informative_;
  std::shared_ptr<std::atomic<std::uint64_t>> access_count_;
};

struct LoadOptions {
  /// Column holding the label; empty selects the last column.
  std::string label_column;
  /// For binary data, the label value mapped to class 1. Default: the
  /// lexicographically greater class name.
  std::string positive_label;
  /// Columns forced categorical even if their values parse as numbers.
  std::vector<std::string> categorical;
};

/// Ingest a CSV with a header row. Numeric columns have missing values
/// ("", "?", "NA", "NaN", "N/A") imputed by the column median; categorical
/// columns are one-hot encoded (missing becomes its own category); rows
/// with a missing label are dropped; constant columns are dropped with a
/// warning; every kept column is standardized to mean 0 / std 1 over the
/// full dataset. Throws IngestError with row/column diagnostics.
Dataset load_csv(const std::string& path, const LoadOptions& options = {});

/// Same pipeline on in-memory CSV text; `source_name` labels diagnostics.
Dataset load_csv_text(const std::string& text, const LoadOptions& options = {},
                      const std::string& source_name = "<string>");

/// Names accepted by load_bundled().
std::vector<std::string> bundled_names();

/// Load one of the datasets compiled into the library.
Dataset load_bundled(const std::string& name);

struct SplitSpec {
  double train_frac = 0.6;
  double val_frac = 0.2;
  double test_frac = 0.2;
  bool stratified = true;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DataSplits {
  Dataset train;
  Dataset val;
  Dataset test;
};

/// Deterministic, disjoint, exhaustive split. Stratified mode apportions
/// each class by largest remainder (within one sample of the exact
/// fractions) and guarantees at least one sample per class per partition,
/// throwing SplitError when a class has fewer samples than partitions.
DataSplits split(const Dataset& ds, const SplitSpec& spec);

/// View of the columns selected by a binary mask. Requires |mask| equal to
/// the feature count and at least one set bit (std::domain_error).
Dataset apply_mask(const Dataset& ds, std::span<const std::uint8_t> mask);

/// Rows of a followed by rows of b; schemas must agree.
Dataset concat_rows(const Dataset& a, const Dataset& b);

/// Balanced k-class dataset with d_informative linearly separating columns
/// (class centers on signed unit patterns, within-class spread well under
/// the center separation) followed by d_noise standard normal columns.
/// Which columns are informative is recorded in informative().
Dataset synthesize(int n, int d_informative, int d_noise, int k,
                   std::uint64_t seed);

}  // namespace qibonn
