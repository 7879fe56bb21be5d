// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/cut.hpp"

#include <random>

#include "doctest.h"
#include "sgs/eig.hpp"
#include "sgs/oracle.hpp"
#include "test_util.hpp"

using namespace sgs;

namespace {

ArrayX<bool> random_valid_assignment(std::mt19937_64& rng,
                                     const SparseGraph& g) {
  ArrayX<bool> a(g.nodes());
  while (true) {
    for (Index i = 0; i < g.nodes(); ++i) {
      a(i) = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    }
    Index pix_b = 0;
    for (Index i = 0; i < g.n_grid; ++i) pix_b += a(i) ? 1 : 0;
    if (pix_b > 0 && pix_b < g.n_grid) return a;
  }
}

}  // namespace

TEST_SUITE_BEGIN("cut");

TEST_CASE("2x2 column split worked example") {
  const QuantizedImage qi = test::qi_from_labels(2, 2, {0, 1, 0, 1});
  const SparseGraph g = build_graph(qi, 0.5);
  ArrayX<bool> assignment(6);
  assignment << false, true, false, true, false, true;
  const CutResult cr = discrete_energy(g, qi, assignment);
  CHECK(cr.n_mismatch == 0);
  CHECK(cr.n_boundary == 2);
  CHECK(cr.vol_a == doctest::Approx(6.0));
  CHECK(cr.vol_b == doctest::Approx(6.0));
  CHECK(cr.energy == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(cr.ncut == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(cr.alpha == doctest::Approx(std::sqrt(6.0 / (12.0 * 6.0))));
  CHECK(cr.beta == doctest::Approx(std::sqrt(6.0 / (12.0 * 6.0))));
}

TEST_CASE("empty pixel side raises a degenerate-cut error") {
  const QuantizedImage qi = test::qi_from_labels(2, 2, {0, 1, 0, 1});
  const SparseGraph g = build_graph(qi, 0.5);
  ArrayX<bool> all_pixels_one_side(6);
  all_pixels_one_side << false, false, false, false, true, true;
  CHECK_THROWS_AS(discrete_energy(g, qi, all_pixels_one_side),
                  DegenerateCutError);
}

TEST_CASE("energy equals the quadratic form of the level encoding") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Index h = std::uniform_int_distribution<Index>(1, 4)(rng);
    const Index w = std::uniform_int_distribution<Index>(2, 4)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(
        1, static_cast<int32_t>(std::min<Index>(h * w, 3)))(rng);
    const double mu = std::uniform_real_distribution<double>(0.01, 50.0)(rng);
    const QuantizedImage qi = test::random_qi(rng, h, w, k);
    const SparseGraph g = build_graph(qi, mu);
    const ArrayX<bool> assignment = random_valid_assignment(rng, g);
    const CutResult cr = discrete_energy(g, qi, assignment);

    const VectorX<double> z = partition_vector(g, assignment);
    // Constraint checks for the encoding itself.
    CHECK(std::abs(g.degree.dot(z)) <= 1e-9 * g.total_volume);
    CHECK(z.dot(g.degree.cwiseProduct(z)) ==
          doctest::Approx(1.0).epsilon(1e-9));

    const double quad = laplacian_quadratic(g, z);
    CHECK(cr.energy == doctest::Approx(quad).epsilon(1e-9));
    CHECK(cr.ncut == doctest::Approx(quad).epsilon(1e-9));
  }
}

TEST_CASE("mismatch and boundary factor the energy exactly") {
  // ||x - H y||^2 = (alpha+beta)^2 * n_mismatch and
  // x^T L_grid x = mu (alpha+beta)^2 * n_boundary, with H built explicitly.
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Index h = std::uniform_int_distribution<Index>(2, 4)(rng);
    const Index w = std::uniform_int_distribution<Index>(2, 4)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(2, 3)(rng);
    const double mu = std::uniform_real_distribution<double>(0.05, 5.0)(rng);
    const QuantizedImage qi = test::random_qi(rng, h, w, k);
    const SparseGraph g = build_graph(qi, mu);
    const ArrayX<bool> assignment = random_valid_assignment(rng, g);
    const CutResult cr = discrete_energy(g, qi, assignment);
    const VectorX<double> z = partition_vector(g, assignment);

    const Index n = h * w;
    MatrixX<double> hot = MatrixX<double>::Zero(n, qi.k);
    for (Index i = 0; i < n; ++i) hot(i, qi.labels(i)) = 1.0;
    const VectorX<double> x = z.head(n);
    const VectorX<double> y = z.tail(qi.k);

    const double levels = cr.alpha + cr.beta;
    const double mismatch_term = (x - hot * y).squaredNorm();
    CHECK(mismatch_term ==
          doctest::Approx(levels * levels * cr.n_mismatch).epsilon(1e-9));

    MatrixX<double> grid_lap = MatrixX<double>::Zero(n, n);
    for (Index y0 = 0; y0 < h; ++y0) {
      for (Index x0 = 0; x0 < w; ++x0) {
        const Index a = y0 * w + x0;
        if (x0 + 1 < w) {
          const Index b = a + 1;
          grid_lap(a, a) += mu;
          grid_lap(b, b) += mu;
          grid_lap(a, b) -= mu;
          grid_lap(b, a) -= mu;
        }
        if (y0 + 1 < h) {
          const Index b = a + w;
          grid_lap(a, a) += mu;
          grid_lap(b, b) += mu;
          grid_lap(a, b) -= mu;
          grid_lap(b, a) -= mu;
        }
      }
    }
    const double boundary_term = x.dot(grid_lap * x);
    CHECK(boundary_term ==
          doctest::Approx(mu * levels * levels * cr.n_boundary)
              .epsilon(1e-9));

    // Eq. 5: both terms together reproduce the full quadratic form.
    CHECK(mismatch_term + boundary_term ==
          doctest::Approx(laplacian_quadratic(g, z)).epsilon(1e-9));
  }
}

TEST_CASE("threshold sweep on a cleanly separated vector") {
  const QuantizedImage qi = test::qi_from_labels(2, 3, {0, 0, 1, 0, 0, 1});
  const SparseGraph g = build_graph(qi, 0.25);
  VectorX<double> x(g.nodes());
  // Pixels of color 0 and its node near -1; color 1 and its node near +1.
  x << -1.0, -0.9, 1.0, -0.95, -1.05, 0.9, -1.02, 1.05;
  const CutResult cr = threshold_sweep(g, qi, x, 5);
  for (Index i = 0; i < 6; ++i) {
    CHECK(cr.assignment(i) == (qi.labels(i) == 1));
  }
  CHECK(cr.n_mismatch == 0);
}

TEST_CASE("constant vector has no valid threshold") {
  const QuantizedImage qi = test::qi_from_labels(2, 2, {0, 1, 0, 1});
  const SparseGraph g = build_graph(qi, 0.5);
  const VectorX<double> flat = VectorX<double>::Ones(g.nodes());
  CHECK_THROWS_AS(threshold_sweep(g, qi, flat, 8), DegenerateCutError);
}

TEST_CASE("sweep result is minimal over its own candidates") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const QuantizedImage qi = test::random_qi(rng, 3, 4, 3);
    const SparseGraph g = build_graph(qi, 0.4);
    const EigenResult er = fiedler(g, 1e-8, 2000, trial);
    const int n_candidates = 16;
    const CutResult best = threshold_sweep(g, qi, er.vector, n_candidates);

    std::vector<double> sorted(er.vector.data(),
                               er.vector.data() + g.nodes());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 1; i <= n_candidates; ++i) {
      const double pos = static_cast<double>(i) / (n_candidates + 1) *
                         (g.nodes() - 1);
      const Index idx = std::clamp<Index>(
          static_cast<Index>(std::llround(pos)), 1, g.nodes() - 2);
      const double t = sorted[idx];
      ArrayX<bool> a(g.nodes());
      for (Index j = 0; j < g.nodes(); ++j) a(j) = er.vector(j) > t;
      Index pix_b = 0;
      for (Index j = 0; j < g.n_grid; ++j) pix_b += a(j) ? 1 : 0;
      if (pix_b == 0 || pix_b == g.n_grid) continue;
      const CutResult cand = discrete_energy(g, qi, a);
      CHECK(best.ncut <= cand.ncut + 1e-12);
      CHECK(best.energy <= cand.energy + 1e-12);
    }
  }
}

TEST_CASE("sweep finds the exhaustive optimum on a clean two-region image") {
  // 3x4, left half color 0, right half color 1.
  const QuantizedImage qi =
      test::qi_from_labels(3, 4, {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1});
  const SparseGraph g = build_graph(qi, 0.5);
  const ExhaustiveCut best = min_ncut_exhaustive(g);
  const EigenResult er = fiedler(g, 1e-10, 4000, 11);
  const CutResult swept = threshold_sweep(g, qi, er.vector, 32);
  CHECK(swept.ncut == doctest::Approx(best.ncut).epsilon(1e-10));
}

TEST_SUITE_END();
