// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <cstdint>
#include <span>

#include "sgs/image.hpp"

namespace sgs {

/// Projects each pixel feature onto the top `out_dim` principal axes of the
/// mean-centered data, ordered by descending explained variance. The sign of
/// each axis is fixed so its largest-magnitude loading is positive. If the
/// covariance rank falls short of out_dim the missing output channels are
/// zero and `pca_padded_axes` records how many.
FeatureMap pca_project(const FeatureMap& fm, Index out_dim);

/// Channel-wise bilinear interpolation with corner-aligned sampling: output
/// corners reproduce input corners exactly. A size-1 input axis replicates.
FeatureMap upsample_bilinear(const FeatureMap& fm, Index out_h, Index out_w);

/// Mini-batch K-means over pixel features with k-means++ initialization from
/// a seeded PRNG. When the input has at most k distinct feature vectors each
/// distinct vector becomes its own cluster (exact indexing, zero
/// distortion). Empty clusters are dropped and ids compacted.
QuantizedImage quantize(const FeatureMap& fm, int32_t k, uint64_t seed,
                        int64_t batch = 1024, int64_t iters = 100);

/// Decodes PNG or binary PGM bytes into a dim-3 FeatureMap with values in
/// [0, 255]; grayscale is replicated across the three channels.
FeatureMap rgb_to_featuremap(std::span<const uint8_t> encoded_bytes);

/// Mean squared distance from each pixel to its cluster's mean feature --
/// the quantization objective evaluated on the final partition.
double quantize_distortion(const FeatureMap& fm, const QuantizedImage& qi);

}  // namespace sgs
