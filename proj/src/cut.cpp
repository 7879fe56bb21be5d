// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/cut.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sgs {

CutResult discrete_energy(const SparseGraph& g, std::span<const int32_t> labels,
                          const ArrayX<bool>& assignment) {
  const Index n_nodes = g.nodes();
  const Index n = g.n_grid;
  if (assignment.size() != n_nodes) {
    throw std::invalid_argument("discrete_energy: assignment length mismatch");
  }
  if (static_cast<Index>(labels.size()) != n) {
    throw std::invalid_argument("discrete_energy: labels length mismatch");
  }

  Index pixels_b = 0;
  for (Index i = 0; i < n; ++i) pixels_b += assignment(i) ? 1 : 0;
  if (pixels_b == 0 || pixels_b == n) {
    throw DegenerateCutError("discrete_energy: a side has no pixel nodes");
  }

  double vol_b = 0;
  for (Index i = 0; i < n_nodes; ++i) {
    if (assignment(i)) vol_b += g.degree(i);
  }
  const double vol_a = g.total_volume - vol_b;
  if (!(vol_a > 0) || !(vol_b > 0)) {
    throw DegenerateCutError("discrete_energy: a side has zero volume");
  }

  double cut = 0;
  int64_t n_boundary = 0;
  for (Index row = 0; row < n_nodes; ++row) {
    const bool side = assignment(row);
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      if (it.col() > row && assignment(it.col()) != side) {
        cut += it.value();
        if (row < n && it.col() < n) ++n_boundary;
      }
    }
  }

  int64_t n_mismatch = 0;
  for (Index i = 0; i < n; ++i) {
    if (assignment(i) != assignment(n + labels[i])) ++n_mismatch;
  }

  CutResult out;
  out.assignment = assignment;
  out.vol_a = vol_a;
  out.vol_b = vol_b;
  out.n_mismatch = n_mismatch;
  out.n_boundary = n_boundary;
  out.ncut = cut / vol_a + cut / vol_b;
  out.energy = g.total_volume / (vol_a * vol_b) *
               (static_cast<double>(n_mismatch) + g.mu * n_boundary);
  out.alpha = std::sqrt(vol_a / (g.total_volume * vol_b));
  out.beta = std::sqrt(vol_b / (g.total_volume * vol_a));
  return out;
}

CutResult discrete_energy(const SparseGraph& g, const QuantizedImage& qi,
                          const ArrayX<bool>& assignment) {
  return discrete_energy(
      g, std::span<const int32_t>(qi.labels.data(), qi.labels.size()),
      assignment);
}

CutResult threshold_sweep(const SparseGraph& g, std::span<const int32_t> labels,
                          const VectorX<double>& x, int n_candidates) {
  const Index n_nodes = g.nodes();
  if (x.size() != n_nodes) {
    throw std::invalid_argument("threshold_sweep: vector length mismatch");
  }
  if (n_candidates < 2) {
    throw std::invalid_argument("threshold_sweep: need n_candidates >= 2");
  }

  std::vector<double> sorted(x.data(), x.data() + n_nodes);
  std::sort(sorted.begin(), sorted.end());

  bool found = false;
  CutResult best;
  double prev_threshold = std::numeric_limits<double>::quiet_NaN();
  ArrayX<bool> assignment(n_nodes);
  for (int i = 1; i <= n_candidates; ++i) {
    const double pos =
        static_cast<double>(i) / (n_candidates + 1) * (n_nodes - 1);
    const Index idx = std::clamp<Index>(static_cast<Index>(std::llround(pos)),
                                        1, n_nodes - 2);
    const double t = sorted[idx];
    if (t == sorted[n_nodes - 1]) continue;  // side B would be empty
    if (!std::isnan(prev_threshold) && t == prev_threshold) continue;
    prev_threshold = t;

    for (Index j = 0; j < n_nodes; ++j) assignment(j) = x(j) > t;
    Index pixels_b = 0;
    for (Index j = 0; j < g.n_grid; ++j) pixels_b += assignment(j) ? 1 : 0;
    if (pixels_b == 0 || pixels_b == g.n_grid) continue;

    CutResult cur = discrete_energy(g, labels, assignment);
    cur.threshold = t;
    if (!found || cur.ncut < best.ncut) {
      best = std::move(cur);
      found = true;
    }
  }
  if (!found) {
    throw DegenerateCutError(
        "threshold_sweep: every candidate threshold is degenerate");
  }
  return best;
}

CutResult threshold_sweep(const SparseGraph& g, const QuantizedImage& qi,
                          const VectorX<double>& x, int n_candidates) {
  return threshold_sweep(
      g, std::span<const int32_t>(qi.labels.data(), qi.labels.size()), x,
      n_candidates);
}

VectorX<double> partition_vector(const SparseGraph& g,
                                 const ArrayX<bool>& assignment) {
  if (assignment.size() != g.nodes()) {
    throw std::invalid_argument("partition_vector: assignment length mismatch");
  }
  double vol_b = 0;
  for (Index i = 0; i < g.nodes(); ++i) {
    if (assignment(i)) vol_b += g.degree(i);
  }
  const double vol_a = g.total_volume - vol_b;
  if (!(vol_a > 0) || !(vol_b > 0)) {
    throw DegenerateCutError("partition_vector: a side has zero volume");
  }
  const double alpha = std::sqrt(vol_a / (g.total_volume * vol_b));
  const double beta = std::sqrt(vol_b / (g.total_volume * vol_a));
  VectorX<double> z(g.nodes());
  for (Index i = 0; i < g.nodes(); ++i) z(i) = assignment(i) ? alpha : -beta;
  return z;
}

}  // namespace sgs
