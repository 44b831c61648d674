#ifndef PCPFORGE_TRANSFORM_POWER_HPP
#define PCPFORGE_TRANSFORM_POWER_HPP

#include <optional>

#include "pcpforge/csp/instance.hpp"
#include "pcpforge/graph/graph.hpp"

namespace pcpforge {

struct PowerOptions {
  enum class Mode { Exact, Sampled };
  Mode mode = Mode::Exact;
  uint64_t sample_count = 0;      // Sampled mode
  uint64_t seed = 0;              // Sampled mode
  std::optional<int> max_len;     // override of B (defaults to 10 t ceil(log2|Sigma|))
  uint64_t state_cap = 30'000'000;  // exact-mode DP state cap
};

struct PowerResult {
  Instance instance;  // variables unchanged; ball alphabets; walk relations
  Graph graph;        // source constraint graph
  int t = 1;
  int max_len = 0;    // B
  Rational total_weight;       // exact mode: 1 - ((t-1)/t)^B
  Rational truncation_tail;    // ((t-1)/t)^B
};

// B := 10 t log2|Sigma|, rounded up.
int powering_max_len(int t, uint64_t alphabet_size);

// Graph powering via stopping random walks. Exact mode aggregates every
// surviving walk by (start, end, filtered step set) with exact rational
// weights; Sampled mode emits a unit-weight multiset of sampled constraints.
PowerResult power(const Instance& inst, int t, const PowerOptions& opts = {});

// Canonical completeness lift: sigma'(v) = sigma restricted to ball(v, t).
Assignment power_lift(const PowerResult& pw, const Assignment& sigma);

// Normalizes a weighted instance into an unweighted one by LCM scaling of the
// weights into multiplicities. Fails with TooLarge when the total multiplicity
// would exceed cap.
Instance materialize(const Instance& inst, uint64_t cap = 100'000'000);

}  // namespace pcpforge

#endif
