// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include "sgs/graph.hpp"
#include "sgs/types.hpp"

namespace sgs {

/// Brute-force references for tests: exact discrete optima and dense
/// spectra on instances small enough to enumerate or densify.

struct ExhaustiveCut {
  ArrayX<bool> assignment;  // true = side B; node 0 always side A
  double ncut = 0;
};

/// Enumerates every nontrivial bipartition (n+k <= 22) and returns the
/// minimum-Ncut assignment, ties broken by lexicographically smallest
/// assignment vector.
ExhaustiveCut min_ncut_exhaustive(const SparseGraph& g);

struct DenseSpectrum {
  VectorX<double> values;   // ascending
  MatrixX<double> vectors;  // columns, D-orthonormal (X^T D X = I)
};

/// Full spectrum of L x = lambda D x via the symmetric-definite reduction
/// (n+k <= 256).
DenseSpectrum dense_generalized_eig(const SparseGraph& g);

/// Dense L = D - W for oracle checks.
MatrixX<double> dense_laplacian(const SparseGraph& g);

}  // namespace sgs
