// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/image.hpp"

#include <cmath>
#include <string>

namespace sgs {

FeatureMap make_feature_map(Index height, Index width, Index dim) {
  if (height < 1 || width < 1 || dim < 1) {
    throw std::invalid_argument("FeatureMap dimensions must be positive");
  }
  FeatureMap fm;
  fm.height = height;
  fm.width = width;
  fm.dim = dim;
  fm.data.setZero(height * width, dim);
  return fm;
}

void validate(const FeatureMap& fm) {
  if (fm.height < 1 || fm.width < 1 || fm.dim < 1) {
    throw std::invalid_argument("FeatureMap dimensions must be positive");
  }
  if (fm.data.rows() != fm.pixels() || fm.data.cols() != fm.dim) {
    throw std::invalid_argument("FeatureMap data shape does not match header");
  }
  if (!fm.data.allFinite()) {
    throw std::invalid_argument("FeatureMap contains NaN or Inf");
  }
}

void validate(const QuantizedImage& qi) {
  if (qi.height < 1 || qi.width < 1) {
    throw std::invalid_argument("QuantizedImage dimensions must be positive");
  }
  if (qi.k < 1) throw std::invalid_argument("QuantizedImage k must be >= 1");
  if (qi.labels.size() != qi.pixels()) {
    throw std::invalid_argument("QuantizedImage label count != pixel count");
  }
  if (qi.counts.size() != qi.k) {
    throw std::invalid_argument("QuantizedImage counts size != k");
  }
  ArrayX<int64_t> seen = ArrayX<int64_t>::Zero(qi.k);
  for (Index i = 0; i < qi.labels.size(); ++i) {
    const int32_t label = qi.labels(i);
    if (label < 0 || label >= qi.k) {
      throw std::invalid_argument("QuantizedImage label out of range: " +
                                  std::to_string(label));
    }
    seen(label)++;
  }
  for (int32_t j = 0; j < qi.k; ++j) {
    if (seen(j) == 0) {
      throw std::invalid_argument("QuantizedImage cluster " +
                                  std::to_string(j) + " is empty");
    }
    if (seen(j) != qi.counts(j)) {
      throw std::invalid_argument("QuantizedImage counts mismatch for cluster " +
                                  std::to_string(j));
    }
  }
}

}  // namespace sgs
