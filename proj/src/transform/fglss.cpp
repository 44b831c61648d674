#include "pcpforge/transform/fglss.hpp"

#include <map>

#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

FglssResult fglss(const Instance& inst, uint64_t cap) {
  require(inst.is_binary(), Errc::NotLabelCover, "FGLSS expects binary constraints");
  FglssResult out;
  out.clouds.assign(inst.num_edges(), {});

  for (size_t ei = 0; ei < inst.num_edges(); ++ei) {
    const Edge& e = inst.edges()[ei];
    auto left = inst.alphabet_of(e.vars[0])->enumerate(cap);
    auto right = inst.alphabet_of(e.vars[1])->enumerate(cap);
    for (auto& a : left)
      for (auto& b : right) {
        LabelValue pair_arr[2] = {a, b};
        if (!e.rel->accepts(pair_arr)) continue;
        // duplicated endpoints (self-loops) must agree
        if (e.vars[0] == e.vars[1] && !(a == b)) continue;
        out.clouds[ei].push_back((int)out.legend.size());
        out.legend.push_back({ei, {a.plain(), b.plain()}});
      }
  }

  std::vector<std::pair<int, int>> gedges;
  auto consistent = [&](const FglssVertex& x, const FglssVertex& y) {
    const Edge& ex = inst.edges()[x.edge];
    const Edge& ey = inst.edges()[y.edge];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (ex.vars[(size_t)i] == ey.vars[(size_t)j] &&
            x.labels[(size_t)i] != y.labels[(size_t)j])
          return false;
    return true;
  };
  for (int u = 0; u < (int)out.legend.size(); ++u)
    for (int v = u + 1; v < (int)out.legend.size(); ++v) {
      if (out.legend[(size_t)u].edge == out.legend[(size_t)v].edge) continue;
      if (consistent(out.legend[(size_t)u], out.legend[(size_t)v])) gedges.push_back({u, v});
    }
  out.graph = Graph((int)out.legend.size(), std::move(gedges));
  return out;
}

std::vector<int> fglss_canonical_clique(const FglssResult& fg, const Instance& inst,
                                        const Assignment& sigma) {
  std::vector<int> clique;
  for (size_t ei = 0; ei < inst.num_edges(); ++ei) {
    const Edge& e = inst.edges()[ei];
    if (!edge_satisfied(inst, e, sigma)) continue;
    for (int v : fg.clouds[ei]) {
      const FglssVertex& fv = fg.legend[(size_t)v];
      if (LabelValue(fv.labels[0]) == sigma.values[(size_t)e.vars[0]] &&
          LabelValue(fv.labels[1]) == sigma.values[(size_t)e.vars[1]]) {
        clique.push_back(v);
        break;
      }
    }
  }
  return clique;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  std::map<std::pair<int, int>, bool> adj;
  for (auto [u, v] : g.edges()) {
    adj[{std::min(u, v), std::max(u, v)}] = true;
  }
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      int u = std::min(vertices[i], vertices[j]);
      int v = std::max(vertices[i], vertices[j]);
      if (u == v) return false;
      if (!adj.count({u, v})) return false;
    }
  return true;
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, size_t cap) {
  int n = g.num_vertices();
  std::vector<std::vector<bool>> adj((size_t)n, std::vector<bool>((size_t)n, false));
  for (auto [u, v] : g.edges())
    if (u != v) adj[(size_t)u][(size_t)v] = adj[(size_t)v][(size_t)u] = true;

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    require(out.size() < cap, Errc::TooLarge, "clique enumeration over cap");
    out.push_back(cur);
    for (int v = next; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!adj[(size_t)u][(size_t)v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace pcpforge
