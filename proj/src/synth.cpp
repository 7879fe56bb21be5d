// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace sgs {
namespace {

void fill_square(ArrayX<uint8_t>& regions, Index side, Index y0, Index x0,
                 Index extent) {
  for (Index y = y0; y < y0 + extent; ++y) {
    for (Index x = x0; x < x0 + extent; ++x) {
      regions(y * side + x) = 1;
    }
  }
}

GroundTruth make_pattern(Pattern pattern, Index side) {
  GroundTruth gt;
  gt.side = side;
  gt.regions = ArrayX<uint8_t>::Zero(side * side);
  switch (pattern) {
    case Pattern::kCenteredSquare: {
      const Index s = side / 2;
      const Index o = (side - s) / 2;
      fill_square(gt.regions, side, o, o, s);
      break;
    }
    case Pattern::kFourSquares: {
      const Index s = side / 4;
      const Index half = side / 2;
      const Index o = (half - s) / 2;
      fill_square(gt.regions, side, o, o, s);
      fill_square(gt.regions, side, o, half + o, s);
      fill_square(gt.regions, side, half + o, o, s);
      fill_square(gt.regions, side, half + o, half + o, s);
      break;
    }
    case Pattern::kDiagonalSquares: {
      const Index s = side / 4;
      const Index o = (side - 2 * s) / 2;
      fill_square(gt.regions, side, o, o, s);
      fill_square(gt.regions, side, o + s, o + s, s);
      break;
    }
  }
  return gt;
}

}  // namespace

SyntheticImage generate(const SyntheticSpec& spec) {
  if (spec.side < 4) throw std::invalid_argument("generate: side must be >= 4");
  if (spec.noise == NoiseKind::kGaussian && spec.noise_param < 0) {
    throw std::invalid_argument("generate: negative variance");
  }
  if (spec.noise == NoiseKind::kSaltPepper &&
      (spec.noise_param < 0 || spec.noise_param > 1)) {
    throw std::invalid_argument("generate: S&P density outside [0, 1]");
  }

  SyntheticImage out;
  out.truth = make_pattern(spec.pattern, spec.side);
  const Index n = spec.side * spec.side;

  VectorX<double> values(n);
  for (Index i = 0; i < n; ++i) values(i) = out.truth.regions(i);

  std::mt19937_64 rng(spec.seed);
  if (spec.noise == NoiseKind::kGaussian && spec.noise_param > 0) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(spec.noise_param));
    for (Index i = 0; i < n; ++i) values(i) += gauss(rng);
  } else if (spec.noise == NoiseKind::kSaltPepper && spec.noise_param > 0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Index i = 0; i < n; ++i) {
      if (unit(rng) < spec.noise_param) {
        values(i) = unit(rng) < 0.5 ? 0.0 : 1.0;
      }
    }
  }

  const double lo = values.minCoeff();
  const double hi = values.maxCoeff();
  const double range = hi - lo;
  out.features = make_feature_map(spec.side, spec.side, 3);
  for (Index i = 0; i < n; ++i) {
    const double scaled =
        range > 0 ? 255.0 * (values(i) - lo) / range : 0.0;
    const double v = static_cast<double>(std::lround(scaled));
    out.features.data(i, 0) = v;
    out.features.data(i, 1) = v;
    out.features.data(i, 2) = v;
  }
  return out;
}

Segmentation to_segmentation(const GroundTruth& gt) {
  Segmentation seg;
  seg.height = gt.side;
  seg.width = gt.side;
  seg.seg_ids.resize(gt.regions.size());
  for (Index i = 0; i < gt.regions.size(); ++i) {
    seg.seg_ids(i) = gt.regions(i);
  }
  seg.n_segments = 2;
  seg.per_segment_energy = {std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN()};
  return seg;
}

}  // namespace sgs
