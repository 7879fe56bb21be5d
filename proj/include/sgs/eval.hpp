// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <vector>

#include "sgs/segmenter.hpp"
#include "sgs/types.hpp"

namespace sgs {

struct MatchPair {
  int32_t gt_segment = 0;
  int32_t pred_segment = 0;
  double iou = 0;
};

/// One-to-one matching between ground-truth and predicted segments.
/// miou averages matched IoU over ground-truth segments; unmatched ground
/// truth contributes zero.
struct MatchReport {
  std::vector<MatchPair> pairs;
  std::vector<int32_t> unmatched_gt;
  std::vector<int32_t> unmatched_pred;
  double miou = 0;
};

/// |A intersect B| / |A union B| in integer arithmetic; throws if both masks
/// are empty.
double iou(const ArrayX<bool>& mask_a, const ArrayX<bool>& mask_b);

/// Builds the |GT| x |Pred| IoU matrix, zero-pads to square, and solves the
/// optimal assignment maximizing total IoU. Dummy matches surface as
/// unmatched entries.
MatchReport match_segments(const Segmentation& gt, const Segmentation& pred);

/// Mean of per-ground-truth mious; throws on an empty list.
double miou_multi_gt(const std::vector<Segmentation>& gts,
                     const Segmentation& pred);

/// Maximum-total-score assignment on a square matrix; returns the column
/// matched to each row. O(m^3) shortest-augmenting-path implementation.
std::vector<Index> max_assignment(const MatrixX<double>& score);

}  // namespace sgs
