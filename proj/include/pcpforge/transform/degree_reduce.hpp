#ifndef PCPFORGE_TRANSFORM_DEGREE_REDUCE_HPP
#define PCPFORGE_TRANSFORM_DEGREE_REDUCE_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

// Original variable -> ordered cloud; cloud slot i corresponds to the i-th
// incidence of the variable in the edge list (multiplicity expanded).
struct CloudMap {
  std::vector<std::vector<VarId>> clouds;  // original variable -> new variables
  std::vector<VarId> owner;                // new variable -> original variable

  VarId cloud_slot(VarId original, int slot) const { return clouds[(size_t)original][(size_t)slot]; }
};

struct DegreeReduceResult {
  Instance instance;
  CloudMap map;
};

// Splits each variable into deg(v) copies, one inter-cloud edge per original
// edge carrying the original relation, and a d0-regular equality expander on
// each cloud. Marked sets map to unions of clouds. NonBinaryInstance unless
// every constraint is binary.
DegreeReduceResult degree_reduce(const Instance& inst, int d0, uint64_t seed);

// Canonical completeness lift: copy sigma(v) to every vertex of cloud(v).
Assignment degree_reduce_lift(const CloudMap& map, const Assignment& sigma);

}  // namespace pcpforge

#endif
