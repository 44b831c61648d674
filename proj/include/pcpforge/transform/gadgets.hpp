#ifndef PCPFORGE_TRANSFORM_GADGETS_HPP
#define PCPFORGE_TRANSFORM_GADGETS_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

struct E3SatMap {
  // source variable -> (first bit variable, bit count); label index encoded
  // little-endian. Auxiliary chain variables follow all bit blocks.
  std::vector<std::pair<VarId, int>> block;
  int num_bit_vars = 0;
  int clauses_per_block = 0;  // K, uniform across constraints
  std::vector<std::vector<LabelValue>> source_labels;  // per variable, index -> label
};

struct E3SatResult {
  Instance instance;  // every constraint a 3-literal disjunction
  E3SatMap map;
};

// Binary-encodes labels, compiles each constraint into an E3CNF block of
// exactly K clauses (first clause duplicated as padding), with a fixed
// auxiliary-variable budget per block so that swapped relations share the
// variable set.
E3SatResult to_e3sat(const Instance& label_cover, uint64_t cap = kDefaultEnumCap);

// Completeness lift: encode labels, set chain variables from the literals.
Assignment e3sat_encode(const E3SatResult& sat, const Instance& source,
                        const Assignment& sigma);

// Per clause (l1 v l2 v l3): the seven equations l1=1, l2=1, l3=1, l1+l2=1,
// l2+l3=1, l1+l3=1, l1+l2+l3=1 (negative literal x read as 1+x). Variables
// unchanged. Fails with NotE3SAT unless every constraint is a 3-literal
// disjunction.
Instance e3sat_to_3lin(const Instance& e3sat);

// Negation mask of a 3-literal disjunction; NotE3SAT if the relation is not
// one (i.e. it must reject exactly one tuple).
int clause_negation_mask(const Relation& rel);

}  // namespace pcpforge

#endif
