#ifndef PCPFORGE_GRAPH_SPECTRAL_HPP
#define PCPFORGE_GRAPH_SPECTRAL_HPP

#include "pcpforge/graph/graph.hpp"

namespace pcpforge {

inline constexpr int kDenseEigenCap = 4096;

struct LambdaResult {
  double value = 0;        // lambda(G) = max{lambda_2, |lambda_n|}; 0 when n == 1
  double lambda1 = 0;      // largest adjacency eigenvalue
  double error_bound = 0;  // residual-based bound on eigenvalue error
  bool certified = false;  // true when error_bound <= tolerance
};

// Full dense symmetric eigensolve up to kDenseEigenCap vertices; above the
// cap, certified power iteration on the regular-graph complement of the
// all-ones eigenspace. Fails with TooLarge for large irregular graphs.
LambdaResult lambda(const Graph& g, double tolerance = 1e-9);

}  // namespace pcpforge

#endif
