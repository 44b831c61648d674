#ifndef PCPFORGE_TRANSFORM_SPARSIFY_HPP
#define PCPFORGE_TRANSFORM_SPARSIFY_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

struct SparsifyMap {
  // per original edge: its W variable, and the original variable tuple
  std::vector<VarId> w_var;
  std::vector<std::vector<VarId>> edge_vars;
};

struct SparsifyResult {
  Instance instance;
  SparsifyMap map;
};

// Reduces t-ary Boolean constraints (2 <= t <= 6) to binary projection
// constraints: one W variable per edge over the satisfying local views of its
// relation, and per position a projection "view -> bit_i(view)". Fails with
// ArityTooHigh beyond arity 6.
SparsifyResult sparsify(const Instance& inst);

// Extends an assignment of the original variables by the true local views.
Assignment sparsify_lift(const SparsifyResult& sp, const Instance& original,
                         const Assignment& sigma);

}  // namespace pcpforge

#endif
