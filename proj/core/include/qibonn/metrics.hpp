#pragma once

#include <span>
#include <vector>

#include "qibonn/matrix.hpp"

namespace qibonn {

/// Threshold-free ranking metrics. Binary labels are 0/1; multiclass labels
/// are class ids 0..K-1 scored by an n x K per-class score matrix.

enum class RankMetric { RocAuc, PrAuc };

/// Probability that a uniformly random positive outscores a uniformly
/// random negative, ties counting 1/2 (Mann-Whitney; equals the trapezoidal
/// ROC area). Throws UndefinedMetricError unless both classes are present.
double roc_auc(std::span<const double> scores, std::span<const int> labels);

/// Average precision: the sum over ranked positives of precision-at-rank
/// times the 1/n_pos recall increment. Ties are broken by a stable
/// score-descending sort, so equal scores keep their input order.
/// Throws UndefinedMetricError when no positives are present.
double pr_auc(std::span<const double> scores, std::span<const int> labels);

/// Unweighted mean over classes of the binary metric computed one-vs-rest
/// on (score column c, labels == c). Classes absent from `labels` are
/// skipped; `skipped` (when non-null) receives how many. Requires k >= 3
/// and scores with one column per class.
double macro_ovr(const Matrix& class_scores, std::span<const int> labels,
                 RankMetric metric, int* skipped = nullptr);

}  // namespace qibonn
