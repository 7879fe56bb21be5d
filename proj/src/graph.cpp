// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sgs {
namespace {

void finish_graph(SparseGraph& g) {
  g.adjacency.makeCompressed();
  const Index n = g.nodes();
  g.degree.setZero(n);
  for (Index row = 0; row < n; ++row) {
    double sum = 0;
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      sum += it.value();
    }
    g.degree(row) = sum;
  }
  g.total_volume = g.degree.sum();
}

}  // namespace

RegionGraph build_region_graph(const QuantizedImage& qi, double mu,
                               std::span<const Index> region) {
  validate(qi);
  if (!(mu > 0)) throw std::invalid_argument("build_graph: mu must be > 0");
  if (region.empty()) {
    throw std::invalid_argument("build_region_graph: empty region");
  }
  const Index h = qi.height;
  const Index w = qi.width;
  const Index n = static_cast<Index>(region.size());

  RegionGraph rg;
  rg.pixels.assign(region.begin(), region.end());

  // Global pixel id -> local id, -1 outside the region.
  std::vector<int32_t> local_of(static_cast<size_t>(h * w), -1);
  for (Index i = 0; i < n; ++i) {
    const Index g = region[i];
    if (g < 0 || g >= h * w) {
      throw std::invalid_argument("build_region_graph: pixel id out of range");
    }
    if (i > 0 && region[i] <= region[i - 1]) {
      throw std::invalid_argument("build_region_graph: region not sorted");
    }
    local_of[g] = static_cast<int32_t>(i);
  }

  // Colors present in the region, ascending by global cluster id.
  std::vector<int64_t> color_count(qi.k, 0);
  for (Index i = 0; i < n; ++i) color_count[qi.labels(region[i])]++;
  std::vector<int32_t> color_local(qi.k, -1);
  for (int32_t c = 0; c < qi.k; ++c) {
    if (color_count[c] > 0) {
      color_local[c] = static_cast<int32_t>(rg.colors.size());
      rg.colors.push_back(c);
    }
  }
  const Index kk = static_cast<Index>(rg.colors.size());
  rg.labels.resize(n);
  for (Index i = 0; i < n; ++i) {
    rg.labels[i] = color_local[qi.labels(region[i])];
  }

  SparseGraph& g = rg.graph;
  g.n_grid = n;
  g.n_extra = kk;
  g.mu = mu;
  const Index total = n + kk;
  g.adjacency.resize(total, total);

  // Per-row nonzero counts: neighbors + color edge for pixels, n_j for colors.
  Eigen::VectorXi row_nnz(total);
  std::vector<std::array<int32_t, 4>> nbrs(n);
  std::vector<int> nbr_count(n, 0);
  for (Index i = 0; i < n; ++i) {
    const Index gpix = region[i];
    const Index y = gpix / w;
    const Index x = gpix % w;
    int cnt = 0;
    // Ascending global (and therefore local) order: up, left, right, down.
    const Index cand[4] = {y > 0 ? gpix - w : -1, x > 0 ? gpix - 1 : -1,
                           x + 1 < w ? gpix + 1 : -1,
                           y + 1 < h ? gpix + w : -1};
    for (const Index c : cand) {
      if (c >= 0 && local_of[c] >= 0) nbrs[i][cnt++] = local_of[c];
    }
    nbr_count[i] = cnt;
    row_nnz(i) = cnt + 1;
  }
  for (Index c = 0; c < kk; ++c) {
    row_nnz(n + c) = static_cast<int>(color_count[rg.colors[c]]);
  }
  g.adjacency.reserve(row_nnz);

  for (Index i = 0; i < n; ++i) {
    for (int j = 0; j < nbr_count[i]; ++j) {
      g.adjacency.insert(i, nbrs[i][j]) = mu;
    }
    g.adjacency.insert(i, n + rg.labels[i]) = 1.0;
  }
  // Color rows: local pixel ids ascend as we scan pixels in order.
  std::vector<std::vector<int32_t>> color_pixels(kk);
  for (Index c = 0; c < kk; ++c) {
    color_pixels[c].reserve(static_cast<size_t>(color_count[rg.colors[c]]));
  }
  for (Index i = 0; i < n; ++i) color_pixels[rg.labels[i]].push_back(i);
  for (Index c = 0; c < kk; ++c) {
    for (const int32_t p : color_pixels[c]) {
      g.adjacency.insert(n + c, p) = 1.0;
    }
  }

  finish_graph(g);
  return rg;
}

SparseGraph build_graph(const QuantizedImage& qi, double mu) {
  std::vector<Index> all(static_cast<size_t>(qi.pixels()));
  for (Index i = 0; i < qi.pixels(); ++i) all[i] = i;
  return build_region_graph(qi, mu, all).graph;
}

double laplacian_quadratic(const SparseGraph& g, const VectorX<double>& z) {
  if (z.size() != g.nodes()) {
    throw std::invalid_argument("laplacian_quadratic: vector length mismatch");
  }
  double sum = 0;
  for (Index row = 0; row < g.nodes(); ++row) {
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      if (it.col() > row) {
        const double d = z(row) - z(it.col());
        sum += it.value() * d * d;
      }
    }
  }
  return sum;
}

VectorX<double> apply_laplacian(const SparseGraph& g, const VectorX<double>& z) {
  if (z.size() != g.nodes()) {
    throw std::invalid_argument("apply_laplacian: vector length mismatch");
  }
  return g.degree.cwiseProduct(z) - g.adjacency * z;
}

bool is_connected(const SparseGraph& g) {
  const Index n = g.nodes();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Index> stack{0};
  seen[0] = 1;
  Index visited = 1;
  while (!stack.empty()) {
    const Index u = stack.back();
    stack.pop_back();
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, u); it; ++it) {
      if (!seen[it.col()]) {
        seen[it.col()] = 1;
        ++visited;
        stack.push_back(it.col());
      }
    }
  }
  return visited == n;
}

void write_matrix_market(std::ostream& out, const SparseGraph& g) {
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  const Index n = g.nodes();
  out << n << " " << n << " " << g.adjacency.nonZeros() / 2 << "\n";
  char buf[64];
  for (Index row = 0; row < n; ++row) {
    for (SparseMatrixX<double>::InnerIterator it(g.adjacency, row); it; ++it) {
      if (it.col() < row) {
        std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                      static_cast<long long>(row + 1),
                      static_cast<long long>(it.col() + 1), it.value());
        out << buf;
      }
    }
  }
}

SparseGraph graph_from_edges(
    Index n_nodes, std::span<const std::tuple<Index, Index, double>> edges,
    double mu) {
  SparseGraph g;
  g.n_grid = n_nodes;
  g.n_extra = 0;
  g.mu = mu;
  g.adjacency.resize(n_nodes, n_nodes);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(edges.size() * 2);
  for (const auto& [i, j, w] : edges) {
    if (i == j || i < 0 || j < 0 || i >= n_nodes || j >= n_nodes) {
      throw std::invalid_argument("graph_from_edges: bad edge");
    }
    triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), w);
    triplets.emplace_back(static_cast<int>(j), static_cast<int>(i), w);
  }
  g.adjacency.setFromTriplets(triplets.begin(), triplets.end());
  finish_graph(g);
  return g;
}

}  // namespace sgs
