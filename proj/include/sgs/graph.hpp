// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <tuple>
#include <vector>

#include "sgs/image.hpp"
#include "sgs/types.hpp"

namespace sgs {

/// Weighted undirected graph over n_grid pixel nodes (row-major pixel order)
/// followed by n_extra color nodes. The adjacency is symmetric CSR with zero
/// diagonal; pixel i carries grid edges of weight mu to its 4-neighbors plus
/// one unit edge to its color node, so its degree is mu * (#neighbors) + 1
/// and color node j has degree n_j.
struct SparseGraph {
  Index n_grid = 0;
  Index n_extra = 0;
  double mu = 0;
  SparseMatrixX<double> adjacency;  // (n_grid+n_extra) square, both triangles
  VectorX<double> degree;           // exact row sums of adjacency
  double total_volume = 0;          // sum of degrees

  Index nodes() const { return n_grid + n_extra; }
};

SparseGraph build_graph(const QuantizedImage& qi, double mu);

/// Induced subgraph on a subset of pixels: grid edges internal to the
/// subset, color nodes restricted to the colors present with degrees from
/// subset-local counts.
struct RegionGraph {
  SparseGraph graph;
  std::vector<Index> pixels;    // local pixel id -> global pixel id, ascending
  std::vector<int32_t> labels;  // local pixel id -> local color id
  std::vector<int32_t> colors;  // local color id -> global cluster id
};

/// `region` must be sorted ascending and nonempty.
RegionGraph build_region_graph(const QuantizedImage& qi, double mu,
                               std::span<const Index> region);

/// Laplacian quadratic form sum_{(i,j) in E} w(i,j) (z_i - z_j)^2, evaluated
/// edge-wise without materializing L.
double laplacian_quadratic(const SparseGraph& g, const VectorX<double>& z);

/// (D - W) z in one sparse pass.
VectorX<double> apply_laplacian(const SparseGraph& g, const VectorX<double>& z);

bool is_connected(const SparseGraph& g);

/// Matrix Market coordinate dump of the adjacency (symmetric, lower
/// triangle, exact decimal weights).
void write_matrix_market(std::ostream& out, const SparseGraph& g);

/// Arbitrary-graph constructor for solver tests and oracles; edges are
/// (i, j, weight) with i != j, each undirected edge listed once.
SparseGraph graph_from_edges(Index n_nodes,
                             std::span<const std::tuple<Index, Index, double>> edges,
                             double mu = 0);

}  // namespace sgs
