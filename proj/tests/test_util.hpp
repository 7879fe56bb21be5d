// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "sgs/image.hpp"

namespace sgs::test {

inline QuantizedImage qi_from_labels(Index h, Index w,
                                     const std::vector<int32_t>& labels) {
  QuantizedImage qi;
  qi.height = h;
  qi.width = w;
  qi.labels.resize(h * w);
  int32_t k = 0;
  for (Index i = 0; i < h * w; ++i) {
    qi.labels(i) = labels[i];
    k = std::max(k, labels[i] + 1);
  }
  qi.k = k;
  qi.counts = ArrayX<int64_t>::Zero(k);
  for (Index i = 0; i < h * w; ++i) qi.counts(qi.labels(i))++;
  return qi;
}

// Random labels with every id in [0, k) present at least once (needs
// h*w >= k).
inline QuantizedImage random_qi(std::mt19937_64& rng, Index h, Index w,
                                int32_t k) {
  std::vector<int32_t> labels(static_cast<size_t>(h * w));
  std::uniform_int_distribution<int32_t> pick(0, k - 1);
  for (auto& l : labels) l = pick(rng);
  for (int32_t j = 0; j < k; ++j) labels[j] = j;
  std::shuffle(labels.begin(), labels.end(), rng);
  return qi_from_labels(h, w, labels);
}

}  // namespace sgs::test
