// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/eig.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <stdexcept>

namespace sgs {
namespace {

constexpr double kDegenerateEigenvalue = 1e-10;
constexpr double kBasisDropTol = 1e-14;

}  // namespace

EigenResult fiedler(const SparseGraph& g, double tol, int max_iters,
                    uint64_t seed) {
  if (!(tol > 0)) throw std::invalid_argument("fiedler: tol must be > 0");
  if (max_iters < 1) throw std::invalid_argument("fiedler: max_iters < 1");
  const Index n = g.nodes();
  if (n < 2) throw std::invalid_argument("fiedler: need at least 2 nodes");

  const VectorX<double> sqrt_d = g.degree.cwiseSqrt();
  const VectorX<double> inv_sqrt_d = sqrt_d.cwiseInverse();

  // Normalized operator A = I - D^{-1/2} W D^{-1/2}. Its diagonal is
  // identically one (diag L = D, no self loops), so the Jacobi
  // preconditioner reduces to the identity here.
  const auto apply_op = [&](const VectorX<double>& u) -> VectorX<double> {
    return u - inv_sqrt_d.cwiseProduct(g.adjacency *
                                       inv_sqrt_d.cwiseProduct(u));
  };

  // Known nullspace direction of A, deflated from every iterate.
  const VectorX<double> null_dir = sqrt_d / sqrt_d.norm();
  const auto deflate = [&](VectorX<double>& v) {
    v -= null_dir * null_dir.dot(v);
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorX<double> x(n);
  for (Index i = 0; i < n; ++i) x(i) = gauss(rng);
  deflate(x);
  double xn = x.norm();
  if (xn < 1e-12) {
    // Pathological draw; fall back to a coordinate-ish start.
    x.setZero();
    x(0) = 1;
    deflate(x);
    xn = x.norm();
  }
  x /= xn;

  VectorX<double> ax = apply_op(x);
  double lambda = x.dot(ax);

  VectorX<double> p, ap;  // previous search direction and its image
  bool have_p = false;
  VectorX<double> r(n), w(n), aw(n);

  EigenResult out;
  bool converged = false;
  double resid = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    r = ax - lambda * x;
    resid = sqrt_d.cwiseProduct(r).norm();
    if (resid <= tol) {
      converged = true;
      break;
    }

    w = r;
    deflate(w);
    w -= x * x.dot(w);
    const double wn = w.norm();
    if (wn < kBasisDropTol) break;  // no progress possible in this subspace
    w /= wn;
    aw = apply_op(w);

    if (have_p) {
      const double px = x.dot(p);
      const double pw = w.dot(p);
      p -= x * px;
      ap -= ax * px;
      p -= w * pw;
      ap -= aw * pw;
      const double pn = p.norm();
      if (pn < kBasisDropTol) {
        have_p = false;
      } else {
        p /= pn;
        ap /= pn;
      }
    }

    // Rayleigh-Ritz on the orthonormal basis [x, w, p].
    const int m = have_p ? 3 : 2;
    MatrixX<double> gram(m, m);
    gram(0, 0) = x.dot(ax);
    gram(0, 1) = gram(1, 0) = x.dot(aw);
    gram(1, 1) = w.dot(aw);
    if (have_p) {
      gram(0, 2) = gram(2, 0) = x.dot(ap);
      gram(1, 2) = gram(2, 1) = w.dot(ap);
      gram(2, 2) = p.dot(ap);
    }
    Eigen::SelfAdjointEigenSolver<MatrixX<double>> ritz(gram);
    const VectorX<double> c = ritz.eigenvectors().col(0);
    lambda = ritz.eigenvalues()(0);

    VectorX<double> x_new = c(0) * x + c(1) * w;
    VectorX<double> ax_new = c(0) * ax + c(1) * aw;
    VectorX<double> p_new = c(1) * w;
    VectorX<double> ap_new = c(1) * aw;
    if (have_p) {
      x_new += c(2) * p;
      ax_new += c(2) * ap;
      p_new += c(2) * p;
      ap_new += c(2) * ap;
    }
    const double pn = p_new.norm();
    if (pn >= kBasisDropTol) {
      p = p_new / pn;
      ap = ap_new / pn;
      have_p = true;
    } else {
      have_p = false;
    }
    x = x_new;
    ax = ax_new;
    deflate(x);
    const double norm = x.norm();
    x /= norm;
    ax /= norm;
    // Refresh the cached image now and then; the recurrences above drift.
    if ((iter & 63) == 63) ax = apply_op(x);
  }

  if (!converged) {
    r = ax - lambda * x;
    resid = sqrt_d.cwiseProduct(r).norm();
    converged = resid <= tol;
  }

  out.value = lambda;
  out.residual = resid;
  out.iterations = iter;
  out.converged = converged;
  out.degenerate = lambda < kDegenerateEigenvalue;

  out.vector = inv_sqrt_d.cwiseProduct(x);
  Index max_idx = 0;
  out.vector.cwiseAbs().maxCoeff(&max_idx);
  if (out.vector(max_idx) < 0) out.vector = -out.vector;
  return out;
}

double rayleigh(const SparseGraph& g, const VectorX<double>& z) {
  if (z.size() != g.nodes()) {
    throw std::invalid_argument("rayleigh: vector length mismatch");
  }
  const double denom = z.dot(g.degree.cwiseProduct(z));
  if (denom == 0) throw std::invalid_argument("rayleigh: zero vector");
  return laplacian_quadratic(g, z) / denom;
}

}  // namespace sgs
