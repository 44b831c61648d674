#include "pcpforge/transform/degree_reduce.hpp"

#include "pcpforge/graph/expander.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

DegreeReduceResult degree_reduce(const Instance& inst, int d0, uint64_t seed) {
  require(inst.is_binary(), Errc::NonBinaryInstance, "degree reduction needs binary constraints");
  require(inst.is_unweighted(), Errc::InvalidArgument,
          "degree reduction expects an unweighted instance (materialize first)");
  int n = inst.num_variables();

  CloudMap map;
  map.clouds.assign((size_t)n, {});
  std::vector<int> next_slot((size_t)n, 0);
  auto deg = inst.degrees();
  VarId next_var = 0;
  std::vector<int> var_alphabet;
  for (VarId v = 0; v < n; ++v) {
    int alph = inst.alphabet_index_of(v);
    for (int64_t i = 0; i < std::max<int64_t>(deg[(size_t)v], 1); ++i) {
      map.clouds[(size_t)v].push_back(next_var++);
      map.owner.push_back(v);
      var_alphabet.push_back(alph);
    }
  }

  std::vector<Edge> edges;
  // inter-cloud edges, one per original edge instance (multiplicity expanded)
  for (const auto& e : inst.edges()) {
    for (uint64_t k = 0; k < e.mult; ++k) {
      VarId cu = map.cloud_slot(e.vars[0], next_slot[(size_t)e.vars[0]]++);
      VarId cv = map.cloud_slot(e.vars[1], next_slot[(size_t)e.vars[1]]++);
      Edge out;
      out.vars = {cu, cv};
      out.rel = e.rel;
      edges.push_back(std::move(out));
    }
  }
  // intra-cloud equality expanders
  RelationPtr eq = Relation::equality();
  for (VarId v = 0; v < n; ++v) {
    int size = (int)map.clouds[(size_t)v].size();
    auto intra = cloud_edges(size, d0, derive_seed(seed, (uint64_t)v));
    for (auto [a, b] : intra) {
      Edge out;
      out.vars = {map.clouds[(size_t)v][(size_t)a], map.clouds[(size_t)v][(size_t)b]};
      out.rel = eq;
      edges.push_back(std::move(out));
    }
  }

  std::optional<std::vector<VarId>> marked;
  if (inst.has_marked()) {
    std::vector<VarId> m;
    for (VarId v : inst.marked())
      for (VarId c : map.clouds[(size_t)v]) m.push_back(c);
    std::sort(m.begin(), m.end());
    marked = std::move(m);
  }

  Instance out(inst.alphabets(), std::move(var_alphabet), std::move(edges), std::move(marked));
  return {std::move(out), std::move(map)};
}

Assignment degree_reduce_lift(const CloudMap& map, const Assignment& sigma) {
  Assignment out;
  out.values.resize(map.owner.size());
  for (size_t c = 0; c < map.owner.size(); ++c)
    out.values[c] = sigma.values[(size_t)map.owner[c]];
  return out;
}

}  // namespace pcpforge
