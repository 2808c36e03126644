#include "qibonn/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qibonn/errors.hpp"

namespace qibonn {

double roc_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("roc_auc: scores/labels length mismatch");
  }
  const std::size_t n = scores.size();
  std::size_t n_pos = 0;
  for (int y : labels) n_pos += y ? 1 : 0;
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw UndefinedMetricError("roc_auc needs both classes present");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });

  // Rank-sum with average ranks over tied scores; equivalent to counting
  // positive/negative pairs with ties worth 1/2.
  double pos_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based
    for (std::size_t t = i; t < j; ++t) {
      if (labels[order[t]]) pos_rank_sum += avg_rank;
    }
    i = j;
  }
  const double np = static_cast<double>(n_pos);
  const double nn = static_cast<double>(n_neg);
  return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double pr_auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) {
    throw std::invalid_argument("pr_auc: scores/labels length mismatch");
  }
  const std::size_t n = scores.size();
  std::size_t n_pos = 0;
  for (int y : labels) n_pos += y ? 1 : 0;
  if (n_pos == 0) {
    throw UndefinedMetricError("pr_auc needs at least one positive");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });

  double ap = 0.0;
  std::size_t hits = 0;
  for (std::size_t rank = 1; rank <= n; ++rank) {
    if (labels[order[rank - 1]]) {
      ++hits;
      ap += static_cast<double>(hits) / static_cast<double>(rank);
    }
  }
  return ap / static_cast<double>(n_pos);
}

double macro_ovr(const Matrix& class_scores, std::span<const int> labels,
                 RankMetric metric, int* skipped) {
  const int k = static_cast<int>(class_scores.cols());
  if (k < 3) {
    throw std::invalid_argument("macro_ovr requires k >= 3 score columns");
  }
  if (class_scores.rows() != labels.size()) {
    throw std::invalid_argument("macro_ovr: scores/labels length mismatch");
  }
  const std::size_t n = labels.size();
  double sum = 0.0;
  int present = 0;
  int skip_count = 0;
  std::vector<double> col(n);
  std::vector<int> bin(n);
  for (int c = 0; c < k; ++c) {
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = class_scores(i, static_cast<std::size_t>(c));
      bin[i] = labels[i] == c ? 1 : 0;
      any = any || bin[i];
    }
    if (!any) {
      ++skip_count;
      continue;
    }
    try {
      sum += metric == RankMetric::RocAuc ? roc_auc(col, bin)
                                          : pr_auc(col, bin);
      ++present;
    } catch (const UndefinedMetricError&) {
      // Single-class one-vs-rest column (all samples in class c); skip it
      // the same way as an absent class.
      ++skip_count;
    }
  }
  if (skipped != nullptr) *skipped = skip_count;
  if (present == 0) {
    throw UndefinedMetricError("macro_ovr: no class had both cohorts");
  }
  return sum / static_cast<double>(present);
}

}  // namespace qibonn
