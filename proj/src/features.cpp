// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/features.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgs/io.hpp"

namespace sgs {
namespace {

// Maps each distinct feature row (by exact value bits) to a dense id in
// first-occurrence order. Returns per-pixel distinct ids.
struct DistinctIndex {
  std::vector<int32_t> pixel_to_distinct;
  std::vector<Index> representative;  // distinct id -> a pixel index
  int32_t count = 0;
};

DistinctIndex build_distinct_index(const FeatureMap& fm) {
  DistinctIndex idx;
  idx.pixel_to_distinct.resize(fm.pixels());
  std::unordered_map<std::string, int32_t> seen;
  seen.reserve(static_cast<size_t>(fm.pixels()));
  const size_t row_bytes = static_cast<size_t>(fm.dim) * sizeof(double);
  for (Index i = 0; i < fm.pixels(); ++i) {
    std::string key(reinterpret_cast<const char*>(fm.data.row(i).data()),
                    row_bytes);
    auto [it, inserted] = seen.emplace(std::move(key), idx.count);
    if (inserted) {
      idx.representative.push_back(i);
      ++idx.count;
    }
    idx.pixel_to_distinct[i] = it->second;
  }
  return idx;
}

Index nearest_center(const MatrixX<double>& centers, Index n_centers,
                     const VectorX<double>& x) {
  Index best = 0;
  double best_d2 = (centers.row(0).transpose() - x).squaredNorm();
  for (Index c = 1; c < n_centers; ++c) {
    const double d2 = (centers.row(c).transpose() - x).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

}  // namespace

FeatureMap pca_project(const FeatureMap& fm, Index out_dim) {
  validate(fm);
  if (out_dim < 1 || out_dim > fm.dim) {
    throw std::invalid_argument("pca_project: out_dim must be in [1, dim]");
  }
  const Index n = fm.pixels();
  const MatrixX<double> x = fm.data;
  const VectorX<double> mean = x.colwise().mean();
  const MatrixX<double> centered = x.rowwise() - mean.transpose();
  const MatrixX<double> cov =
      centered.transpose() * centered / static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<MatrixX<double>> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("pca_project: eigendecomposition failed");
  }
  // Ascending eigenvalues; walk from the back for descending variance.
  const VectorX<double>& evals = solver.eigenvalues();
  const MatrixX<double>& evecs = solver.eigenvectors();
  const double rank_tol = std::max(evals(fm.dim - 1), 0.0) * 1e-12;

  FeatureMap out = make_feature_map(fm.height, fm.width, out_dim);
  for (Index a = 0; a < out_dim; ++a) {
    const Index src = fm.dim - 1 - a;
    if (evals(src) <= rank_tol) {
      out.pca_padded_axes++;
      out.data.col(a).setZero();
      continue;
    }
    VectorX<double> axis = evecs.col(src);
    Index max_loading = 0;
    axis.cwiseAbs().maxCoeff(&max_loading);
    if (axis(max_loading) < 0) axis = -axis;
    out.data.col(a) = centered * axis;
  }
  return out;
}

FeatureMap upsample_bilinear(const FeatureMap& fm, Index out_h, Index out_w) {
  validate(fm);
  if (out_h < fm.height || out_w < fm.width) {
    throw std::invalid_argument("upsample_bilinear: output must not shrink");
  }
  FeatureMap out = make_feature_map(out_h, out_w, fm.dim);
  const double sy = (fm.height > 1 && out_h > 1)
                        ? static_cast<double>(fm.height - 1) / (out_h - 1)
                        : 0.0;
  const double sx = (fm.width > 1 && out_w > 1)
                        ? static_cast<double>(fm.width - 1) / (out_w - 1)
                        : 0.0;
  for (Index r = 0; r < out_h; ++r) {
    const double fy = r * sy;
    const Index y0 = static_cast<Index>(fy);
    const Index y1 = std::min<Index>(y0 + 1, fm.height - 1);
    const double wy = fy - y0;
    for (Index c = 0; c < out_w; ++c) {
      const double fx = c * sx;
      const Index x0 = static_cast<Index>(fx);
      const Index x1 = std::min<Index>(x0 + 1, fm.width - 1);
      const double wx = fx - x0;
      for (Index d = 0; d < fm.dim; ++d) {
        const double v00 = fm.at(y0, x0, d);
        const double v01 = fm.at(y0, x1, d);
        const double v10 = fm.at(y1, x0, d);
        const double v11 = fm.at(y1, x1, d);
        const double top = v00 + (v01 - v00) * wx;
        const double bot = v10 + (v11 - v10) * wx;
        out.at(r, c, d) = top + (bot - top) * wy;
      }
    }
  }
  return out;
}

QuantizedImage quantize(const FeatureMap& fm, int32_t k, uint64_t seed,
                        int64_t batch, int64_t iters) {
  validate(fm);
  if (k < 1) throw std::invalid_argument("quantize: k must be >= 1");
  if (batch < 1 || iters < 0) {
    throw std::invalid_argument("quantize: bad batch/iters");
  }
  const Index n = fm.pixels();
  const DistinctIndex distinct = build_distinct_index(fm);

  QuantizedImage qi;
  qi.height = fm.height;
  qi.width = fm.width;
  qi.labels.resize(n);

  if (distinct.count <= k) {
    // Exact color indexing: every distinct vector is its own cluster.
    qi.k = distinct.count;
    qi.counts = ArrayX<int64_t>::Zero(qi.k);
    for (Index i = 0; i < n; ++i) {
      qi.labels(i) = distinct.pixel_to_distinct[i];
      qi.counts(qi.labels(i))++;
    }
    return qi;
  }

  const MatrixX<double>& x = fm.data;
  std::mt19937_64 rng(seed);

  // k-means++ seeding over the pixel set.
  MatrixX<double> centers(k, fm.dim);
  std::uniform_int_distribution<Index> uniform_pixel(0, n - 1);
  centers.row(0) = x.row(uniform_pixel(rng));
  VectorX<double> min_d2 =
      (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int32_t c = 1; c < k; ++c) {
    const double total = min_d2.sum();
    Index pick = 0;
    if (total > 0) {
      const double target = unit(rng) * total;
      double acc = 0;
      for (Index i = 0; i < n; ++i) {
        acc += min_d2(i);
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = uniform_pixel(rng);
    }
    centers.row(c) = x.row(pick);
    min_d2 = min_d2.cwiseMin(
        (x.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }

  // Sculley-style mini-batch updates with per-center learning rates.
  VectorX<double> center_counts = VectorX<double>::Zero(k);
  std::vector<Index> batch_index(static_cast<size_t>(batch));
  std::vector<Index> batch_center(static_cast<size_t>(batch));
  for (int64_t t = 0; t < iters; ++t) {
    for (int64_t j = 0; j < batch; ++j) {
      batch_index[j] = uniform_pixel(rng);
    }
    for (int64_t j = 0; j < batch; ++j) {
      batch_center[j] =
          nearest_center(centers, k, x.row(batch_index[j]).transpose());
    }
    for (int64_t j = 0; j < batch; ++j) {
      const Index c = batch_center[j];
      center_counts(c) += 1.0;
      const double eta = 1.0 / center_counts(c);
      centers.row(c) += eta * (x.row(batch_index[j]) - centers.row(c));
    }
  }

  // Assign every distinct vector once, then relabel pixels.
  std::vector<int32_t> distinct_center(distinct.representative.size());
  std::vector<int64_t> cluster_size(k, 0);
  for (size_t d = 0; d < distinct.representative.size(); ++d) {
    const Index c = nearest_center(
        centers, k, x.row(distinct.representative[d]).transpose());
    distinct_center[d] = static_cast<int32_t>(c);
  }
  for (Index i = 0; i < n; ++i) {
    cluster_size[distinct_center[distinct.pixel_to_distinct[i]]]++;
  }

  // Drop empty clusters, compact ids in ascending center order.
  std::vector<int32_t> remap(k, -1);
  int32_t k_eff = 0;
  for (int32_t c = 0; c < k; ++c) {
    if (cluster_size[c] > 0) remap[c] = k_eff++;
  }
  qi.k = k_eff;
  qi.counts = ArrayX<int64_t>::Zero(k_eff);
  for (Index i = 0; i < n; ++i) {
    const int32_t label =
        remap[distinct_center[distinct.pixel_to_distinct[i]]];
    qi.labels(i) = label;
    qi.counts(label)++;
  }
  return qi;
}

FeatureMap rgb_to_featuremap(std::span<const uint8_t> encoded_bytes) {
  const io::Raster8 raster = io::decode_image(encoded_bytes);
  FeatureMap fm = make_feature_map(raster.height, raster.width, 3);
  const Index n = fm.pixels();
  for (Index i = 0; i < n; ++i) {
    if (raster.channels == 1) {
      const double v = raster.data[i];
      fm.data(i, 0) = v;
      fm.data(i, 1) = v;
      fm.data(i, 2) = v;
    } else {
      fm.data(i, 0) = raster.data[3 * i];
      fm.data(i, 1) = raster.data[3 * i + 1];
      fm.data(i, 2) = raster.data[3 * i + 2];
    }
  }
  return fm;
}

double quantize_distortion(const FeatureMap& fm, const QuantizedImage& qi) {
  validate(fm);
  validate(qi);
  if (fm.pixels() != qi.pixels()) {
    throw std::invalid_argument("quantize_distortion: shape mismatch");
  }
  MatrixX<double> means = MatrixX<double>::Zero(qi.k, fm.dim);
  for (Index i = 0; i < fm.pixels(); ++i) {
    means.row(qi.labels(i)) += fm.data.row(i);
  }
  for (int32_t c = 0; c < qi.k; ++c) {
    means.row(c) /= static_cast<double>(qi.counts(c));
  }
  double sum = 0;
  for (Index i = 0; i < fm.pixels(); ++i) {
    sum += (fm.data.row(i) - means.row(qi.labels(i)))
               .squaredNorm();
  }
  return sum / static_cast<double>(fm.pixels());
}

}  // namespace sgs
