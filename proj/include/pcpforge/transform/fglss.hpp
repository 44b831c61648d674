#ifndef PCPFORGE_TRANSFORM_FGLSS_HPP
#define PCPFORGE_TRANSFORM_FGLSS_HPP

#include "pcpforge/csp/instance.hpp"
#include "pcpforge/graph/graph.hpp"

namespace pcpforge {

// Legend entry for one FGLSS vertex: which constraint it came from and the
// accepting tuple it encodes.
struct FglssVertex {
  size_t edge = 0;
  std::vector<Label> labels;  // one per edge position
};

struct FglssResult {
  Graph graph;
  std::vector<FglssVertex> legend;
  // per constraint: its cloud, i.e. the FGLSS vertices built from it
  std::vector<std::vector<int>> clouds;
};

// One vertex per (constraint, accepting tuple), edges between consistent
// pairs from distinct constraints. Requires enumerable relations; fails with
// NotLabelCover for non-binary instances.
FglssResult fglss(const Instance& inst, uint64_t cap = kDefaultEnumCap);

// The clique induced by a satisfying assignment: one vertex per constraint.
std::vector<int> fglss_canonical_clique(const FglssResult& fg, const Instance& inst,
                                        const Assignment& sigma);

bool is_clique(const Graph& g, const std::vector<int>& vertices);

// All cliques (including the empty one) of a small graph, by recursion.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, size_t cap = 5'000'000);

}  // namespace pcpforge

#endif
