// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "sgs/types.hpp"

namespace sgs {

/// h x w x d feature grid, row-major with channel-last layout: row
/// `y * width + x` of `data` is the d-dimensional feature of pixel (x, y).
/// Held in double precision; values round to float32 only at the FMAP
/// serialization boundary.
struct FeatureMap {
  Index height = 0;
  Index width = 0;
  Index dim = 0;
  RowMajorMatrixX<double> data;  // (height * width) x dim

  // Number of principal axes that had to be zero-padded because the input
  // covariance was rank deficient; set by pca_project, 0 otherwise.
  int pca_padded_axes = 0;

  Index pixels() const { return height * width; }
  double& at(Index y, Index x, Index c) { return data(y * width + x, c); }
  double at(Index y, Index x, Index c) const { return data(y * width + x, c); }
};

FeatureMap make_feature_map(Index height, Index width, Index dim);

/// Throws std::invalid_argument if shape/data are inconsistent or any value
/// is non-finite.
void validate(const FeatureMap& fm);

/// h x w grid of cluster labels in [0, k). Every id in [0, k) occurs at
/// least once and counts[j] is the number of pixels carrying label j.
struct QuantizedImage {
  Index height = 0;
  Index width = 0;
  ArrayX<int32_t> labels;  // height * width, row-major
  int32_t k = 0;
  ArrayX<int64_t> counts;  // k

  Index pixels() const { return height * width; }
  int32_t label_at(Index y, Index x) const { return labels(y * width + x); }
};

void validate(const QuantizedImage& qi);

}  // namespace sgs
