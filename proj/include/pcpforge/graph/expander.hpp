#ifndef PCPFORGE_GRAPH_EXPANDER_HPP
#define PCPFORGE_GRAPH_EXPANDER_HPP

#include "pcpforge/graph/graph.hpp"

namespace pcpforge {

// Certified expander: uniform random d0-regular multigraph (configuration
// model, loops and parallel edges kept) re-sampled until lambda(G) <= d0/2.
// Deterministic given seed. Fails with ExpanderNotFound when n*d0 is odd
// (no such multigraph exists) or after the retry cap.
Graph build_expander(int n, int d0, uint64_t seed, int max_retries = 64);

// As a d0-regular structure on small clouds the expander degenerates:
// size-1 clouds carry no intra-cloud edges and size-2 clouds carry
// ceil(d0/2) parallel edges. Returns the edge list used by degree reduction.
std::vector<std::pair<int, int>> cloud_edges(int size, int d0, uint64_t seed);

}  // namespace pcpforge

#endif
