// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>

#include "sgs/graph.hpp"
#include "sgs/types.hpp"

namespace sgs {

struct EigenResult {
  VectorX<double> vector;  // D-normalized, sign-fixed Fiedler vector
  double value = 0;        // generalized eigenvalue
  double residual = 0;     // ||L x - value * D x||_2 / ||x||_D
  int iterations = 0;
  bool converged = false;
  bool degenerate = false;  // eigenvalue numerically zero (disconnected graph)
};

/// Second-smallest generalized eigenpair of L x = lambda D x, computed on
/// the equivalent symmetric system D^{-1/2} L D^{-1/2} u = lambda u by a
/// locally optimal preconditioned CG iteration (block size 1) with explicit
/// deflation of the nullspace direction D^{1/2} 1, then mapped back through
/// x = D^{-1/2} u. Memory is O(n); one adjacency matvec per iteration.
///
/// On max_iters exhaustion the best iterate is returned with
/// converged=false; it is still usable for thresholding.
EigenResult fiedler(const SparseGraph& g, double tol = 1e-6,
                    int max_iters = 2000, uint64_t seed = 0);

/// (z^T L z) / (z^T D z).
double rayleigh(const SparseGraph& g, const VectorX<double>& z);

}  // namespace sgs
