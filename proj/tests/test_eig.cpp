// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/eig.hpp"

#include <random>

#include "doctest.h"
#include "sgs/oracle.hpp"
#include "test_util.hpp"

using namespace sgs;

TEST_SUITE_BEGIN("eig");

TEST_CASE("K2: lambda = 2, vector (1,-1)/sqrt(2)") {
  const std::vector<std::tuple<Index, Index, double>> edges = {{0, 1, 1.0}};
  const SparseGraph g = graph_from_edges(2, edges);
  const EigenResult er = fiedler(g, 1e-10, 100, 1);
  CHECK(er.converged);
  CHECK(er.value == doctest::Approx(2.0).epsilon(1e-9));
  const double s = 1.0 / std::sqrt(2.0);
  // Sign convention: largest-magnitude component positive.
  CHECK(std::abs(er.vector(0)) == doctest::Approx(s).epsilon(1e-8));
  CHECK(std::abs(er.vector(1)) == doctest::Approx(s).epsilon(1e-8));
  CHECK(er.vector(0) * er.vector(1) < 0);
  CHECK(std::max(er.vector(0), er.vector(1)) > 0);
}

TEST_CASE("P3 path: generalized eigenvalue 1 with vector (1, 0, -1)") {
  const std::vector<std::tuple<Index, Index, double>> edges = {{0, 1, 1.0},
                                                               {1, 2, 1.0}};
  const SparseGraph g = graph_from_edges(3, edges);
  const EigenResult er = fiedler(g, 1e-10, 200, 7);
  CHECK(er.converged);
  CHECK(er.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(er.vector(1) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(er.vector(0) == doctest::Approx(-er.vector(2)).epsilon(1e-8));
}

TEST_CASE("matches the dense oracle on random image graphs") {
  std::mt19937_64 rng(21);
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Index h = std::uniform_int_distribution<Index>(2, 6)(rng);
    const Index w = std::uniform_int_distribution<Index>(2, 6)(rng);
    const int32_t k = std::uniform_int_distribution<int32_t>(2, 4)(rng);
    const double mu =
        std::uniform_real_distribution<double>(0.01, 50.0)(rng);
    const QuantizedImage qi = test::random_qi(rng, h, w, k);
    const SparseGraph g = build_graph(qi, mu);
    const DenseSpectrum sp = dense_generalized_eig(g);
    // Skip spectrally ill-posed draws: vector comparison needs a gap.
    if (sp.values(2) - sp.values(1) < 1e-3) continue;
    ++compared;

    const EigenResult er = fiedler(g, 1e-10, 10000, trial);
    CHECK(er.converged);
    CHECK(er.value == doctest::Approx(sp.values(1)).epsilon(1e-8));

    VectorX<double> ref = sp.vectors.col(1);
    const VectorX<double> diff_plus = er.vector - ref;
    const VectorX<double> diff_minus = er.vector + ref;
    const double dplus = std::sqrt(diff_plus.dot(g.degree.cwiseProduct(diff_plus)));
    const double dminus =
        std::sqrt(diff_minus.dot(g.degree.cwiseProduct(diff_minus)));
    CHECK(std::min(dplus, dminus) <= 1e-6);

    // Residual contract in the original metric.
    const VectorX<double> res =
        apply_laplacian(g, er.vector) -
        er.value * g.degree.cwiseProduct(er.vector);
    const double xnorm =
        std::sqrt(er.vector.dot(g.degree.cwiseProduct(er.vector)));
    CHECK(res.norm() <= 1e-10 * std::max(1.0, xnorm) + 1e-12);
  }
  CHECK(compared >= 10);
}

TEST_CASE("eigen result is D-normalized and D-orthogonal to constants") {
  std::mt19937_64 rng(23);
  const QuantizedImage qi = test::random_qi(rng, 5, 7, 3);
  const SparseGraph g = build_graph(qi, 0.8);
  const EigenResult er = fiedler(g, 1e-8, 4000, 99);
  CHECK(er.converged);
  CHECK(er.value > 0);
  CHECK(!er.degenerate);
  const double dnorm = er.vector.dot(g.degree.cwiseProduct(er.vector));
  CHECK(dnorm == doctest::Approx(1.0).epsilon(1e-8));
  const double against_const = g.degree.dot(er.vector);
  CHECK(std::abs(against_const) <= 1e-8 * g.total_volume);
}

TEST_CASE("non-convergence is flagged but usable") {
  std::mt19937_64 rng(29);
  const QuantizedImage qi = test::random_qi(rng, 12, 12, 6);
  const SparseGraph g = build_graph(qi, 1.0);
  const EigenResult er = fiedler(g, 1e-14, 2, 5);
  CHECK(!er.converged);
  CHECK(er.iterations == 2);
  CHECK(er.vector.allFinite());
}

TEST_CASE("rayleigh quotient") {
  std::mt19937_64 rng(31);
  const QuantizedImage qi = test::random_qi(rng, 4, 4, 2);
  const SparseGraph g = build_graph(qi, 0.5);

  SUBCASE("constant vector gives zero") {
    CHECK(rayleigh(g, VectorX<double>::Ones(g.nodes())) ==
          doctest::Approx(0.0));
  }
  SUBCASE("zero vector throws") {
    CHECK_THROWS_AS(rayleigh(g, VectorX<double>::Zero(g.nodes())),
                    std::invalid_argument);
  }
  SUBCASE("Fiedler vector attains its eigenvalue") {
    const EigenResult er = fiedler(g, 1e-10, 4000, 3);
    CHECK(rayleigh(g, er.vector) == doctest::Approx(er.value).epsilon(1e-9));
  }
  SUBCASE("random D-orthogonal-to-constant vectors stay above lambda2") {
    const DenseSpectrum sp = dense_generalized_eig(g);
    std::normal_distribution<double> gauss(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
      VectorX<double> z(g.nodes());
      for (Index i = 0; i < z.size(); ++i) z(i) = gauss(rng);
      // Project out the constant direction in the D inner product.
      const double c = g.degree.dot(z) / g.total_volume;
      z.array() -= c;
      CHECK(rayleigh(g, z) >= sp.values(1) - 1e-9);
    }
  }
}

TEST_SUITE_END();
