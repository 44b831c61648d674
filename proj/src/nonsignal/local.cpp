#include "pcpforge/nonsignal/local.hpp"

#include <algorithm>
#include <cmath>

#include "pcpforge/rng.hpp"

namespace pcpforge {

BallView extract_ball(const Graph& g, int center, int radius) {
  BallView view;
  view.center = center;
  view.radius = radius;
  view.vertices = g.ball(center, radius);
  std::vector<bool> inside((size_t)g.num_vertices(), false);
  for (int v : view.vertices) inside[(size_t)v] = true;
  for (auto [u, v] : g.edges())
    if (inside[(size_t)u] && inside[(size_t)v]) view.edges.push_back({u, v});
  return view;
}

std::vector<int> run_local(const LocalAlgorithm& alg, const Graph& g, uint64_t seed) {
  std::vector<int> out((size_t)g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    out[(size_t)v] = alg.rule(extract_ball(g, v, alg.locality), seed);
  return out;
}

NonsignalReport check_nonsignaling_sensitivity(const LocalAlgorithm& alg, const Graph& g,
                                               uint64_t samples, uint64_t seed) {
  NonsignalReport rep;
  rep.locality = alg.locality;
  rep.max_degree = g.max_degree();
  rep.samples = samples;
  rep.passed = true;

  int64_t bound = 2;
  for (int i = 0; i < alg.locality; ++i) bound *= std::max(rep.max_degree, 1);

  std::vector<std::vector<int>> dist;
  for (int v = 0; v < g.num_vertices(); ++v) dist.push_back(g.distances_from(v));

  for (size_t ei = 0; ei < (size_t)g.num_edges(); ++ei) {
    auto [a, b] = g.edges()[ei];
    NonsignalEdgeCheck row;
    row.edge = ei;
    row.bound = bound;
    for (int v = 0; v < g.num_vertices(); ++v) {
      int da = dist[(size_t)v][(size_t)a];
      int db = dist[(size_t)v][(size_t)b];
      if (da >= 0 && da <= alg.locality && db >= 0 && db <= alg.locality) ++row.affected;
    }
    row.affected_ok = row.affected <= row.bound;

    std::vector<std::pair<int, int>> kept = g.edges();
    kept.erase(kept.begin() + (ptrdiff_t)ei);
    Graph deleted(g.num_vertices(), std::move(kept));
    Rational total = 0;
    for (uint64_t s = 0; s < samples; ++s) {
      uint64_t run_seed = derive_seed(seed, s);
      auto x = run_local(alg, g, run_seed);
      auto y = run_local(alg, deleted, run_seed);
      long ham = 0;
      for (int v = 0; v < g.num_vertices(); ++v)
        if (x[(size_t)v] != y[(size_t)v]) ++ham;
      total += ham;
    }
    row.coupling_emd = total / (long)samples;
    row.coupling_ok = row.coupling_emd <= row.affected;
    rep.passed = rep.passed && row.affected_ok && row.coupling_ok;
    rep.edges.push_back(std::move(row));
  }
  return rep;
}

}  // namespace pcpforge
