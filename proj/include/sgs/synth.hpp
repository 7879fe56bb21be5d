// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>

#include "sgs/image.hpp"
#include "sgs/segmenter.hpp"

namespace sgs {

enum class Pattern { kCenteredSquare, kFourSquares, kDiagonalSquares };
enum class NoiseKind { kNone, kGaussian, kSaltPepper };

struct SyntheticSpec {
  Pattern pattern = Pattern::kCenteredSquare;
  Index side = 100;  // image is side x side, side >= 4
  NoiseKind noise = NoiseKind::kNone;
  double noise_param = 0;  // gaussian variance sigma_g^2 or S&P density d
  uint64_t seed = 0;
};

struct GroundTruth {
  Index side = 0;
  ArrayX<uint8_t> regions;  // values {0, 1}, both nonempty
};

struct SyntheticImage {
  FeatureMap features;  // dim 3, integer values in [0, 255]
  GroundTruth truth;
};

/// Binary pattern in {0,1}, pixelwise noise, then min-max rescale to
/// integers in [0, 255], replicated to 3 channels. The ground truth is
/// untouched by noise.
SyntheticImage generate(const SyntheticSpec& spec);

/// Two-segment view of a ground truth for the evaluation module.
Segmentation to_segmentation(const GroundTruth& gt);

}  // namespace sgs
