#ifndef PCPFORGE_HARNESS_VERIFY_HPP
#define PCPFORGE_HARNESS_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>

#include "pcpforge/csp/distribution.hpp"
#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

// One sensitivity-preserving reduction (T_I, T_sigma), packaged for the
// mechanized checks: the transform, its canonical completeness lift, and the
// recovery as exact marginals.
struct ReductionPass {
  std::string name;
  Rational declared_ci = 1;      // swap-distance growth per swapped constraint
  Rational declared_csigma = 1;  // EMD growth per changed assignment entry

  std::function<Instance(const Instance&)> transform;
  std::function<Assignment(const Instance& src, const Instance& dst, const Assignment&)> lift;
  std::function<AssignmentDistribution(const Instance& src, const Instance& dst,
                                       const Assignment& reduced)>
      recover;
};

struct NeighborSampler {
  std::function<Instance(RandomSource&)> sample;
  // one-constraint swap inside the swap-closed family
  std::function<Instance(const Instance&, RandomSource&)> swap_neighbor;
};

struct ReductionReport {
  std::string pass;
  uint64_t trials = 0;
  uint64_t seed = 0;

  // item 1: constructive completeness (canonical lift has value 1)
  bool completeness_ok = false;
  Rational min_lift_value;

  // item 3: measured max swap-distance ratio vs declared C_I
  Rational max_ci_ratio;
  bool ci_ok = false;

  // item 4: measured max EMD-bound ratio (per changed entry) vs declared C_sigma
  Rational max_csigma_ratio;
  bool csigma_ok = false;

  // item 2 (informational): worst recovered value over the adversarial corpus
  Rational min_recovered_value;
  Rational min_reduced_value_seen;

  bool passed() const { return completeness_ok && ci_ok && csigma_ok; }

  // size bookkeeping for composition
  int64_t src_variables = 0, dst_variables = 0;
  int64_t src_edges = 0, dst_edges = 0;
};

ReductionReport verify_reduction(const ReductionPass& pass, const NeighborSampler& sampler,
                                 uint64_t trials, uint64_t seed);

struct PipelineLedger {
  std::vector<ReductionReport> stages;
  Rational ci_product;
  Rational csigma_product;
  Rational ci_csigma_product;
  double growth_factor = 0;  // dst variables / src variables across the chain
  bool all_passed = false;
};

PipelineLedger compose(const std::vector<ReductionReport>& reports);

}  // namespace pcpforge

#endif
