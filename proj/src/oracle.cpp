// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/oracle.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace sgs {
namespace {

struct Edge {
  Index a, b;
  double w;
};

}  // namespace

ExhaustiveCut min_ncut_exhaustive(const SparseGraph& g) {
  const Index n = g.nodes();
  if (n < 2) throw std::invalid_argument("min_ncut_exhaustive: need >= 2 nodes");
  if (n > 22) {
    throw std::invalid_argument(
        "min_ncut_exhaustive: refusing instances with more than 22 nodes");
  }
  std::vector<Edge> edges;
  for (Index row = 0; row < n; ++row) {
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      if (it.col() > row) edges.push_back({row, it.col(), it.value()});
    }
  }

  // Node 0 fixed on side A; every bipartition then has a unique mask, and
  // that representative is automatically the lexicographically smaller of
  // the pair (its first entry is 'false').
  const uint32_t limit = 1u << (n - 1);
  double best_ncut = std::numeric_limits<double>::infinity();
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask < limit; ++mask) {
    // Bit i of mask is the side of node i+1 (true = B).
    double vol_b = 0;
    for (Index i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) vol_b += g.degree(i);
    }
    const double vol_a = g.total_volume - vol_b;
    if (vol_a <= 0 || vol_b <= 0) continue;
    double cut = 0;
    for (const Edge& e : edges) {
      const bool sa = e.a != 0 && (mask & (1u << (e.a - 1)));
      const bool sb = e.b != 0 && (mask & (1u << (e.b - 1)));
      if (sa != sb) cut += e.w;
    }
    const double ncut = cut / vol_a + cut / vol_b;
    if (ncut < best_ncut) {
      best_ncut = ncut;
      best_mask = mask;
    }
    // Exact ties: smaller mask wins. Enumeration order is ascending mask,
    // which is lexicographic over the assignment read LSB-first (node order),
    // so the first hit already is the lexicographically smallest.
  }
  ExhaustiveCut out;
  out.ncut = best_ncut;
  out.assignment = ArrayX<bool>::Constant(n, false);
  for (Index i = 1; i < n; ++i) {
    out.assignment(i) = (best_mask & (1u << (i - 1))) != 0;
  }
  return out;
}

MatrixX<double> dense_laplacian(const SparseGraph& g) {
  const Index n = g.nodes();
  MatrixX<double> lap = MatrixX<double>::Zero(n, n);
  for (Index row = 0; row < n; ++row) {
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      lap(row, it.col()) -= it.value();
    }
    lap(row, row) += g.degree(row);
  }
  return lap;
}

DenseSpectrum dense_generalized_eig(const SparseGraph& g) {
  const Index n = g.nodes();
  if (n > 256) {
    throw std::invalid_argument(
        "dense_generalized_eig: refusing instances with more than 256 nodes");
  }
  const MatrixX<double> lap = dense_laplacian(g);
  const VectorX<double> inv_sqrt_d = g.degree.cwiseSqrt().cwiseInverse();
  const MatrixX<double> sym =
      inv_sqrt_d.asDiagonal() * lap * inv_sqrt_d.asDiagonal();

  Eigen::SelfAdjointEigenSolver<MatrixX<double>> solver(
      0.5 * (sym + sym.transpose()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense_generalized_eig: solver failed");
  }
  DenseSpectrum out;
  out.values = solver.eigenvalues();
  out.vectors = inv_sqrt_d.asDiagonal() * solver.eigenvectors();
  return out;
}

}  // namespace sgs
