#ifndef PCPFORGE_RECOVER_RECOVER_HPP
#define PCPFORGE_RECOVER_RECOVER_HPP

#include "pcpforge/csp/distribution.hpp"
#include "pcpforge/graph/walks.hpp"
#include "pcpforge/transform/alphabet_reduce.hpp"
#include "pcpforge/transform/degree_reduce.hpp"
#include "pcpforge/transform/fglss.hpp"
#include "pcpforge/transform/gadgets.hpp"

namespace pcpforge {

// Degree reduction: per original u, the label histogram over cloud(u).
AssignmentDistribution recover_degree(const CloudMap& map, const Assignment& reduced);

// Expanderization: identity.
AssignmentDistribution recover_expanderize(const Assignment& a);

// Powering: per-vertex opinion distribution and its truncation.
struct TruncatedOpinion {
  Marginal base;       // mu_v, from kernel rows applied to opinions
  Marginal truncated;  // mu*_v
  Rational denominator;  // A_v = sum_a [mu_v(a) - 1/(10|Sigma|)]_+, always >= 9/10
};

TruncatedOpinion truncated_opinion(const WalkKernel& kernel, const Instance& source,
                                   const Assignment& powered, VarId v);

// mu*_v for every vertex, as an exact per-vertex product.
AssignmentDistribution recover_power(const Instance& source, const WalkKernel& kernel,
                                     const Assignment& powered);

// Alphabet reduction: Swiss-cheese threshold decoding of the X blocks.
struct SwissCheese {
  int label_index = 0;    // closest codeword (lexicographically smallest on ties)
  Rational delta;         // relative distance, in [0, 1/2]
  Rational p;             // probability of decoding: max(0, 1 - 4 delta)
};

SwissCheese swiss_cheese(const HadamardCodebook& code, uint64_t block_bits,
                         size_t num_labels);

// Exact per-vertex marginals {decode(c_u): p_u, fallback: 1-p_u}.
AssignmentDistribution recover_alphabet_marginals(const AlphabetReduceMap& map,
                                                  const Assignment& reduced);
// Joint law under the shared threshold: at most n+1 atoms (tau regimes).
AssignmentDistribution recover_alphabet_joint(const AlphabetReduceMap& map,
                                              const Assignment& reduced);
// One sample, drawing the shared 64-bit fixed-point threshold from rng.
Assignment recover_alphabet_sample(const AlphabetReduceMap& map, const Assignment& reduced,
                                   RandomSource& rng);

// FGLSS: unique consistent label per touched variable, fixed fallback
// elsewhere. NotAClique / InconsistentClique on bad input.
Assignment recover_fglss(const FglssResult& fg, const Instance& source,
                         const std::vector<int>& clique);

// E3SAT: decode bit blocks; out-of-range patterns map to the fallback label.
Assignment recover_e3sat(const E3SatMap& map, const Instance& source,
                         const Assignment& sat_assignment);

// 3LIN and serial repetition: identity on variables.
Assignment recover_3lin(const Assignment& a);
Assignment recover_serial(const Assignment& a);

}  // namespace pcpforge

#endif
