// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/eval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgs {

double iou(const ArrayX<bool>& mask_a, const ArrayX<bool>& mask_b) {
  if (mask_a.size() != mask_b.size()) {
    throw std::invalid_argument("iou: mask shapes differ");
  }
  int64_t inter = 0, uni = 0;
  for (Index i = 0; i < mask_a.size(); ++i) {
    const bool a = mask_a(i), b = mask_b(i);
    inter += (a && b) ? 1 : 0;
    uni += (a || b) ? 1 : 0;
  }
  if (uni == 0) throw std::invalid_argument("iou: both masks empty");
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::vector<Index> max_assignment(const MatrixX<double>& score) {
  const Index m = score.rows();
  if (score.cols() != m) {
    throw std::invalid_argument("max_assignment: matrix must be square");
  }
  if (m == 0) return {};
  // Minimize cost = -score with the potentials/augmenting-path scheme.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(m + 1, 0), v(m + 1, 0), minv(m + 1, 0);
  std::vector<Index> p(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1, 0);
  for (Index i = 1; i <= m; ++i) {
    p[0] = i;
    Index j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const Index i0 = p[j0];
      double delta = kInf;
      Index j1 = 0;
      for (Index j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = -score(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (Index j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const Index j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<Index> row_to_col(m, -1);
  for (Index j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  }
  return row_to_col;
}

MatchReport match_segments(const Segmentation& gt, const Segmentation& pred) {
  if (gt.height != pred.height || gt.width != pred.width) {
    throw std::invalid_argument("match_segments: shapes differ");
  }
  const Index n = gt.pixels();
  const Index n_gt = gt.n_segments;
  const Index n_pred = pred.n_segments;

  // Contingency counts give every pairwise IoU in one pass.
  MatrixX<int64_t> overlap = MatrixX<int64_t>::Zero(n_gt, n_pred);
  std::vector<int64_t> gt_size(n_gt, 0), pred_size(n_pred, 0);
  for (Index i = 0; i < n; ++i) {
    const int32_t a = gt.seg_ids(i);
    const int32_t b = pred.seg_ids(i);
    overlap(a, b)++;
    gt_size[a]++;
    pred_size[b]++;
  }
  const Index m = std::max(n_gt, n_pred);
  MatrixX<double> score = MatrixX<double>::Zero(m, m);
  for (Index a = 0; a < n_gt; ++a) {
    for (Index b = 0; b < n_pred; ++b) {
      const int64_t inter = overlap(a, b);
      const int64_t uni = gt_size[a] + pred_size[b] - inter;
      score(a, b) = uni > 0 ? static_cast<double>(inter) / uni : 0.0;
    }
  }

  const std::vector<Index> row_to_col = max_assignment(score);
  MatchReport report;
  std::vector<char> pred_matched(n_pred, 0);
  double total = 0;
  for (Index a = 0; a < n_gt; ++a) {
    const Index b = row_to_col[a];
    if (b < n_pred && score(a, b) > 0) {
      report.pairs.push_back({static_cast<int32_t>(a), static_cast<int32_t>(b),
                              score(a, b)});
      pred_matched[b] = 1;
      total += score(a, b);
    } else {
      report.unmatched_gt.push_back(static_cast<int32_t>(a));
    }
  }
  for (Index b = 0; b < n_pred; ++b) {
    if (!pred_matched[b]) report.unmatched_pred.push_back(static_cast<int32_t>(b));
  }
  report.miou = total / static_cast<double>(n_gt);
  return report;
}

double miou_multi_gt(const std::vector<Segmentation>& gts,
                     const Segmentation& pred) {
  if (gts.empty()) {
    throw std::invalid_argument("miou_multi_gt: empty ground-truth list");
  }
  double sum = 0;
  for (const Segmentation& gt : gts) sum += match_segments(gt, pred).miou;
  return sum / static_cast<double>(gts.size());
}

}  // namespace sgs
