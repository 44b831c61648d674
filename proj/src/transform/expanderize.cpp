#include "pcpforge/transform/expanderize.hpp"

#include "pcpforge/graph/expander.hpp"

namespace pcpforge {

Graph constraint_graph(const Instance& inst) {
  require(inst.is_binary(), Errc::NonBinaryInstance, "constraint graph needs binary constraints");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : inst.edges())
    for (uint64_t k = 0; k < e.mult; ++k) edges.push_back({e.vars[0], e.vars[1]});
  return Graph(inst.num_variables(), std::move(edges));
}

Instance expanderize(const Instance& inst, int d0, uint64_t seed) {
  require(inst.is_binary(), Errc::NonBinaryInstance, "expanderization needs binary constraints");
  require(inst.is_unweighted(), Errc::InvalidArgument,
          "expanderization expects an unweighted instance");
  Graph x = build_expander(inst.num_variables(), d0, seed);
  std::vector<Edge> edges = inst.edges();
  RelationPtr triv = Relation::trivial(2);
  for (auto [u, v] : x.edges()) {
    Edge e;
    e.vars = {(VarId)u, (VarId)v};
    e.rel = triv;
    edges.push_back(std::move(e));
  }
  return Instance(inst.alphabets(), inst.var_alphabet(), std::move(edges),
                  inst.has_marked() ? std::optional(inst.marked()) : std::nullopt);
}

}  // namespace pcpforge
