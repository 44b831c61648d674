#ifndef PCPFORGE_TRANSFORM_EXPANDERIZE_HPP
#define PCPFORGE_TRANSFORM_EXPANDERIZE_HPP

#include "pcpforge/csp/instance.hpp"
#include "pcpforge/graph/graph.hpp"

namespace pcpforge {

// Underlying multigraph of a binary instance, multiplicity expanded; the
// i-th graph edge corresponds to the i-th binary constraint instance.
Graph constraint_graph(const Instance& inst);

// Superimposes a certified (n, d0, <= d0/2)-expander with trivial relations.
// Output degree = d + d0; edge count n(d+d0)/2 for d-regular input.
Instance expanderize(const Instance& inst, int d0, uint64_t seed);

}  // namespace pcpforge

#endif
