#pragma once

#include <stdexcept>
#include <string>

namespace qibonn {

/// Invalid configuration: bad parameter ranges, malformed config documents,
/// inconsistent search-space declarations. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Dataset ingestion failure (unparseable CSV, missing label column,
/// fewer than two classes). Carries row/column diagnostics in the message.
/// Maps to CLI exit code 3.
class IngestError : public std::runtime_error {
 public:
  explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested split cannot be realized (a class has fewer samples than
/// partitions). Maps to CLI exit code 3.
class SplitError : public std::runtime_error {
 public:
  explicit SplitError(const std::string& what) : std::runtime_error(what) {}
};

/// Inner training produced a non-finite loss. Objective wrappers catch this
/// and score the candidate +inf instead of aborting the search.
class TrainingDivergedError : public std::runtime_error {
 public:
  explicit TrainingDivergedError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A metric is undefined on the given inputs (e.g. ROC-AUC with a single
/// class present). Callers decide the fallback.
class UndefinedMetricError : public std::runtime_error {
 public:
  explicit UndefinedMetricError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qibonn
