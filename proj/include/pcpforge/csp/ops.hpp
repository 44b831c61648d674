#ifndef PCPFORGE_CSP_OPS_HPP
#define PCPFORGE_CSP_OPS_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

// Weighted, multiplicity-counted fraction of satisfied constraints.
// value + cost = 1 exactly. Fails with EmptyInstance when total weight is 0.
Rational value(const Instance& inst, const Assignment& a);
Rational cost(const Instance& inst, const Assignment& a);

bool edge_satisfied(const Instance& inst, const Edge& e, const Assignment& a);

// I^{e <- R}: everything identical except the relation at edge_index.
Instance swap_constraint(const Instance& inst, size_t edge_index, RelationPtr rel);

// I - e.
Instance delete_constraint(const Instance& inst, size_t edge_index);

// Number of edge positions whose relations differ as predicates over the
// declared alphabets. Fails with HypergraphMismatch unless both instances
// share the underlying weighted hypergraph.
int64_t swap_distance(const Instance& a, const Instance& b, uint64_t cap = kDefaultEnumCap);

// Count of disagreeing variables. DomainMismatch on size mismatch.
int64_t hamming(const Assignment& a, const Assignment& b);
// Hamming restricted to a variable subset (marked-CSP bookkeeping).
int64_t hamming_on(const Assignment& a, const Assignment& b, const std::vector<VarId>& subset);

}  // namespace pcpforge

#endif
