// Copyright 2026 The sgs Authors. All rights reserved.
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#include "sgs/segmenter.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <limits>

#include "sgs/eig.hpp"

namespace sgs {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Region {
  std::vector<Index> pixels;  // global pixel ids, ascending
  int depth = 0;
  double parent_energy = std::numeric_limits<double>::quiet_NaN();
};

bool accept_split(const SegmenterConfig& cfg, double energy) {
  if (cfg.stop_rule == StopRule::kShiMalik) {
    return energy < cfg.energy_threshold;
  }
  return energy >= cfg.energy_threshold;
}

}  // namespace

std::pair<Segmentation, CutResult> bisect(const QuantizedImage& qi,
                                          const SegmenterConfig& cfg) {
  validate(qi);
  if (qi.pixels() < 2) {
    throw std::invalid_argument("bisect: need at least 2 pixels");
  }
  const SparseGraph g = build_graph(qi, cfg.mu);
  const EigenResult er = fiedler(g, cfg.eig_tol, cfg.eig_max_iters, cfg.seed);
  CutResult cut = threshold_sweep(g, qi, er.vector, cfg.n_candidates);

  Segmentation seg;
  seg.height = qi.height;
  seg.width = qi.width;
  seg.seg_ids.resize(qi.pixels());
  for (Index i = 0; i < qi.pixels(); ++i) {
    seg.seg_ids(i) = cut.assignment(i) ? 1 : 0;
  }
  seg.n_segments = 2;
  seg.per_segment_energy = {cut.energy, cut.energy};
  return {std::move(seg), std::move(cut)};
}

Segmentation segment_recursive(const QuantizedImage& qi,
                               const SegmenterConfig& cfg,
                               RecursionTrace* trace) {
  validate(qi);
  Segmentation out;
  out.height = qi.height;
  out.width = qi.width;
  out.seg_ids.resize(qi.pixels());

  std::deque<Region> queue;
  Region root;
  root.pixels.resize(qi.pixels());
  for (Index i = 0; i < qi.pixels(); ++i) root.pixels[i] = i;
  queue.push_back(std::move(root));

  bool is_root = true;
  while (!queue.empty()) {
    Region region = std::move(queue.front());
    queue.pop_front();

    bool accepted = false;
    CutResult cut;
    if (region.pixels.size() >= 2 && region.depth < cfg.max_depth) {
      SplitRecord rec;
      rec.depth = region.depth;
      try {
        const auto t_graph = Clock::now();
        const RegionGraph rg = build_region_graph(qi, cfg.mu, region.pixels);
        if (trace) trace->graph_ms += ms_since(t_graph);

        const auto t_eig = Clock::now();
        const EigenResult er =
            fiedler(rg.graph, cfg.eig_tol, cfg.eig_max_iters, cfg.seed);
        if (trace) trace->eigen_ms += ms_since(t_eig);

        const auto t_cut = Clock::now();
        cut = threshold_sweep(rg.graph, rg.labels, er.vector,
                              cfg.n_candidates);
        if (trace) trace->cut_ms += ms_since(t_cut);

        rec.energy = cut.energy;
        rec.ncut = cut.ncut;
        rec.n_mismatch = cut.n_mismatch;
        rec.n_boundary = cut.n_boundary;
        accepted = accept_split(cfg, cut.energy);
        rec.accepted = accepted;
      } catch (const DegenerateCutError&) {
        rec.degenerate = true;
        rec.energy = std::numeric_limits<double>::quiet_NaN();
        rec.ncut = std::numeric_limits<double>::quiet_NaN();
        if (trace && is_root) trace->root_degenerate = true;
      }
      if (trace) trace->splits.push_back(rec);
    }
    is_root = false;

    if (accepted) {
      Region child_a, child_b;
      child_a.depth = child_b.depth = region.depth + 1;
      child_a.parent_energy = child_b.parent_energy = cut.energy;
      for (size_t i = 0; i < region.pixels.size(); ++i) {
        if (cut.assignment(static_cast<Index>(i))) {
          child_b.pixels.push_back(region.pixels[i]);
        } else {
          child_a.pixels.push_back(region.pixels[i]);
        }
      }
      queue.push_back(std::move(child_a));
      queue.push_back(std::move(child_b));
      continue;
    }

    const int32_t id = out.n_segments++;
    for (const Index p : region.pixels) out.seg_ids(p) = id;
    out.per_segment_energy.push_back(region.parent_energy);
  }
  return out;
}

}  // namespace sgs
