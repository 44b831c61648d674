#ifndef PCPFORGE_TRANSFORM_SERIAL_HPP
#define PCPFORGE_TRANSFORM_SERIAL_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

// Serial repetition: M constraints, each the conjunction of t uniformly
// sampled constraints, over the unchanged variable set. Edge tuples are the
// concatenated endpoint tuples (repeats allowed); deterministic given seed.
Instance serial_repeat(const Instance& inst, int t, int repetitions, uint64_t seed);

// Which source edges were combined into each output constraint.
std::vector<std::vector<size_t>> serial_repeat_trace(const Instance& inst, int t,
                                                     int repetitions, uint64_t seed);

}  // namespace pcpforge

#endif
