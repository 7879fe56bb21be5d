// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgs/cut.hpp"
#include "sgs/graph.hpp"
#include "sgs/image.hpp"

namespace sgs {

/// shi_malik: a region is split only while a cheap cut exists
/// (energy < threshold). literal: a region keeps splitting until its cut
/// energy drops below the threshold. Both respect max_depth.
enum class StopRule { kShiMalik, kLiteral };

struct SegmenterConfig {
  double mu = 0.01;
  int32_t k = 256;  // quantization vocabulary, used by the pipeline front end
  double energy_threshold = 0.01;
  int max_depth = 3;
  double eig_tol = 1e-6;
  int eig_max_iters = 2000;
  int n_candidates = 32;
  uint64_t seed = 0;
  StopRule stop_rule = StopRule::kShiMalik;
};

struct Segmentation {
  Index height = 0;
  Index width = 0;
  ArrayX<int32_t> seg_ids;  // per pixel, in [0, n_segments)
  int32_t n_segments = 0;
  // Energy of the accepted cut that created each segment; NaN for a root
  // segment that was never split.
  std::vector<double> per_segment_energy;

  Index pixels() const { return height * width; }
};

struct SplitRecord {
  int depth = 0;
  double energy = 0;
  double ncut = 0;
  int64_t n_mismatch = 0;
  int64_t n_boundary = 0;
  bool accepted = false;
  bool degenerate = false;  // the cut attempt failed outright
};

struct RecursionTrace {
  std::vector<SplitRecord> splits;
  double graph_ms = 0;
  double eigen_ms = 0;
  double cut_ms = 0;
  bool root_degenerate = false;
};

/// One bisection of the whole image: build graph, Fiedler, threshold sweep.
/// Pixel-node sides become segment ids 0/1; color-node sides are dropped.
/// Propagates DegenerateCutError.
std::pair<Segmentation, CutResult> bisect(const QuantizedImage& qi,
                                          const SegmenterConfig& cfg);

/// Recursive bisection with the configured stopping rule. Regions are
/// restricted to induced grid subgraphs with region-local color nodes;
/// segment ids follow discovery order (parent before children, side A
/// before side B).
Segmentation segment_recursive(const QuantizedImage& qi,
                               const SegmenterConfig& cfg,
                               RecursionTrace* trace = nullptr);

}  // namespace sgs
