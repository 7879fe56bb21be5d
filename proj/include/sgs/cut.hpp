// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

#include "sgs/graph.hpp"
#include "sgs/image.hpp"
#include "sgs/types.hpp"

namespace sgs {

struct DegenerateCutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One evaluated bipartition of a grid-plus-color-nodes graph. `energy` is
/// the volume-normalized mismatch/boundary factorization
/// (vol(V)/(vol_a*vol_b)) * (n_mismatch + mu * n_boundary), which agrees
/// with `ncut` identically for this graph family.
struct CutResult {
  ArrayX<bool> assignment;  // over n+k nodes, true = side B
  double threshold = std::numeric_limits<double>::quiet_NaN();
  double alpha = 0;  // sqrt(vol_a / (vol(V) * vol_b))
  double beta = 0;   // sqrt(vol_b / (vol(V) * vol_a))
  double ncut = 0;
  double energy = 0;
  int64_t n_mismatch = 0;  // pixels on a different side than their color node
  int64_t n_boundary = 0;  // grid edges with endpoints on different sides
  double vol_a = 0;
  double vol_b = 0;
};

/// Evaluates one assignment: cut and volumes by edge/degree enumeration,
/// mismatch and boundary counts by their definitions. Throws
/// DegenerateCutError when a side has no pixel nodes.
CutResult discrete_energy(const SparseGraph& g, std::span<const int32_t> labels,
                          const ArrayX<bool>& assignment);
CutResult discrete_energy(const SparseGraph& g, const QuantizedImage& qi,
                          const ArrayX<bool>& assignment);

/// Sweeps n_candidates quantile thresholds of x (over all n+k entries,
/// extremes excluded) and returns the minimum-ncut cut; exact ties go to the
/// smaller threshold. Throws DegenerateCutError if every candidate leaves a
/// side without pixels.
CutResult threshold_sweep(const SparseGraph& g, std::span<const int32_t> labels,
                          const VectorX<double>& x, int n_candidates = 32);
CutResult threshold_sweep(const SparseGraph& g, const QuantizedImage& qi,
                          const VectorX<double>& x, int n_candidates = 32);

/// Two-level vector encoding of a bipartition: side A at -beta, side B at
/// +alpha, which satisfies 1^T D z = 0, z^T D z = 1 and z^T L z = Ncut(A,B).
VectorX<double> partition_vector(const SparseGraph& g,
                                 const ArrayX<bool>& assignment);

}  // namespace sgs
