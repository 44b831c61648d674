#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

bool edge_satisfied(const Instance& inst, const Edge& e, const Assignment& a) {
  (void)inst;
  std::vector<LabelValue> tuple;
  tuple.reserve(e.vars.size());
  for (VarId v : e.vars) tuple.push_back(a.values[(size_t)v]);
  return e.rel->accepts(tuple);
}

Rational value(const Instance& inst, const Assignment& a) {
  check_assignment(inst, a);
  Rational total = inst.total_weight();
  require(total > 0, Errc::EmptyInstance, "value undefined: no constraint weight");
  Rational sat = 0;
  for (const auto& e : inst.edges())
    if (edge_satisfied(inst, e, a)) sat += e.weight * (long)e.mult;
  return sat / total;
}

Rational cost(const Instance& inst, const Assignment& a) { return 1 - value(inst, a); }

Instance swap_constraint(const Instance& inst, size_t edge_index, RelationPtr rel) {
  const Edge& old = inst.edge(edge_index);
  require(rel != nullptr, Errc::InvalidArgument, "null relation");
  require(rel->arity() == old.rel->arity(), Errc::ArityMismatch,
          "replacement relation arity differs");
  std::vector<Edge> edges = inst.edges();
  edges[edge_index].rel = std::move(rel);
  return Instance(inst.alphabets(), inst.var_alphabet(), std::move(edges),
                  inst.has_marked() ? std::optional(inst.marked()) : std::nullopt);
}

Instance delete_constraint(const Instance& inst, size_t edge_index) {
  inst.edge(edge_index);  // bounds check -> UnknownEdge
  std::vector<Edge> edges = inst.edges();
  edges.erase(edges.begin() + (ptrdiff_t)edge_index);
  return Instance(inst.alphabets(), inst.var_alphabet(), std::move(edges),
                  inst.has_marked() ? std::optional(inst.marked()) : std::nullopt);
}

int64_t swap_distance(const Instance& a, const Instance& b, uint64_t cap) {
  require(a.same_hypergraph(b), Errc::HypergraphMismatch,
          "swap distance needs a shared hypergraph");
  int64_t dist = 0;
  for (size_t i = 0; i < a.num_edges(); ++i) {
    const Edge& ea = a.edges()[i];
    const Edge& eb = b.edges()[i];
    std::vector<AlphabetPtr> alphs;
    alphs.reserve(ea.vars.size());
    for (VarId v : ea.vars) alphs.push_back(a.alphabet_of(v));
    if (!Relation::same_predicate(*ea.rel, *eb.rel, alphs, cap)) ++dist;
  }
  return dist;
}

int64_t hamming(const Assignment& a, const Assignment& b) {
  require(a.values.size() == b.values.size(), Errc::DomainMismatch,
          "assignments over different variable sets");
  int64_t d = 0;
  for (size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) ++d;
  return d;
}

int64_t hamming_on(const Assignment& a, const Assignment& b, const std::vector<VarId>& subset) {
  require(a.values.size() == b.values.size(), Errc::DomainMismatch,
          "assignments over different variable sets");
  int64_t d = 0;
  for (VarId v : subset) {
    require(v >= 0 && (size_t)v < a.values.size(), Errc::UnknownVariable, "subset variable");
    if (a.values[(size_t)v] != b.values[(size_t)v]) ++d;
  }
  return d;
}

}  // namespace pcpforge
