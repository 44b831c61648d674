#ifndef PCPFORGE_ORACLE_BRUTE_FORCE_HPP
#define PCPFORGE_ORACLE_BRUTE_FORCE_HPP

#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

inline constexpr uint64_t kDefaultBruteForceCap = 20'000'000;

struct OptResult {
  Rational opt;        // exact maximum of value(I, .)
  Assignment witness;  // lexicographically-first maximizer
};

// Exhaustive maximum over all assignments. Fails with TooLarge when the
// assignment space exceeds cap, EmptyInstance for edgeless instances.
OptResult brute_force_opt(const Instance& inst, uint64_t cap = kDefaultBruteForceCap);

// All satisfying assignments (value == 1), lexicographic order; same cap.
std::vector<Assignment> enumerate_satisfying(const Instance& inst,
                                             uint64_t cap = kDefaultBruteForceCap);

}  // namespace pcpforge

#endif
