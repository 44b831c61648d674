#include "pcpforge/graph/expander.hpp"

#include <algorithm>
#include <numeric>

#include "pcpforge/graph/spectral.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

static Graph configuration_model(int n, int d0, RandomSource& rng) {
  std::vector<int> stubs;
  stubs.reserve((size_t)n * (size_t)d0);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d0; ++i) stubs.push_back(v);
  for (size_t i = stubs.size(); i > 1; --i)
    std::swap(stubs[i - 1], stubs[rng.uniform(i)]);
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph(n, std::move(edges));
}

Graph build_expander(int n, int d0, uint64_t seed, int max_retries) {
  require(n >= 1, Errc::InvalidArgument, "expander on empty vertex set");
  require(d0 >= 3, Errc::InvalidArgument, "expander degree must be >= 3");
  if (n == 1) {
    if (d0 % 2 != 0) fail(Errc::ExpanderNotFound, "single vertex needs even degree");
    std::vector<std::pair<int, int>> loops((size_t)d0 / 2, {0, 0});
    return Graph(1, std::move(loops));
  }
  if (((int64_t)n * d0) % 2 != 0)
    fail(Errc::ExpanderNotFound,
         "no " + std::to_string(d0) + "-regular multigraph on " + std::to_string(n) +
             " vertices (odd stub count)");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    RandomSource rng(derive_seed(seed, (uint64_t)attempt));
    Graph g = configuration_model(n, d0, rng);
    LambdaResult lr = lambda(g);
    if (lr.value <= d0 / 2.0 + lr.error_bound) return g;
  }
  fail(Errc::ExpanderNotFound,
       "no certified expander after " + std::to_string(max_retries) + " seeds (n=" +
           std::to_string(n) + ", d0=" + std::to_string(d0) + ")");
}

std::vector<std::pair<int, int>> cloud_edges(int size, int d0, uint64_t seed) {
  require(size >= 1, Errc::InvalidArgument, "empty cloud");
  if (size == 1) return {};
  if (size == 2) {
    std::vector<std::pair<int, int>> edges((size_t)((d0 + 1) / 2), {0, 1});
    return edges;
  }
  return build_expander(size, d0, seed).edges();
}

}  // namespace pcpforge
