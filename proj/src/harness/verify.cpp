#include "pcpforge/harness/verify.hpp"

#include "pcpforge/oracle/brute_force.hpp"
#include "pcpforge/oracle/emd.hpp"

namespace pcpforge {

ReductionReport verify_reduction(const ReductionPass& pass, const NeighborSampler& sampler,
                                 uint64_t trials, uint64_t seed) {
  ReductionReport rep;
  rep.pass = pass.name;
  rep.trials = trials;
  rep.seed = seed;
  rep.min_lift_value = 1;
  rep.max_ci_ratio = 0;
  rep.max_csigma_ratio = 0;
  rep.min_recovered_value = 1;
  rep.min_reduced_value_seen = 1;
  rep.completeness_ok = true;

  RandomSource rng(seed);
  for (uint64_t trial = 0; trial < trials; ++trial) {
    Instance src = sampler.sample(rng);
    Instance dst = pass.transform(src);
    rep.src_variables = src.num_variables();
    rep.dst_variables = dst.num_variables();
    rep.src_edges = (int64_t)src.num_edges();
    rep.dst_edges = (int64_t)dst.num_edges();

    // item 1: the canonical lift of an optimal witness has value 1
    OptResult opt = brute_force_opt(src);
    if (opt.opt == 1) {
      Assignment lifted = pass.lift(src, dst, opt.witness);
      Rational v = value(dst, lifted);
      rep.min_lift_value = std::min(rep.min_lift_value, v);
      if (v != 1) rep.completeness_ok = false;
    }

    // item 3: swap distance ratio on a sampled neighbor
    Instance src2 = sampler.swap_neighbor(src, rng);
    int64_t din = swap_distance(src, src2);
    if (din > 0) {
      Instance dst2 = pass.transform(src2);
      int64_t dout = swap_distance(dst, dst2);
      Rational ratio = rat(dout, din);
      rep.max_ci_ratio = std::max(rep.max_ci_ratio, ratio);
    }

    // item 4: exact per-vertex EMD bound on single-entry changes of sigma'
    {
      Assignment base = pass.lift(src, dst, opt.witness);
      // perturb one variable of the reduced assignment
      VarId v = (VarId)rng.uniform((uint64_t)dst.num_variables());
      auto labels = dst.alphabet_of(v)->enumerate();
      if (labels.size() > 1) {
        Assignment changed = base;
        LabelValue cur = base.values[(size_t)v];
        for (auto& cand : labels)
          if (!(cand == cur)) {
            changed.values[(size_t)v] = cand;
            break;
          }
        auto rec_a = pass.recover(src, dst, base);
        auto rec_b = pass.recover(src, dst, changed);
        Rational bound = emd_upper_product(rec_a, rec_b);
        rep.max_csigma_ratio = std::max(rep.max_csigma_ratio, bound);

        // item 2 (informational): recovered value on the perturbed assignment
        Rational reduced_val = value(dst, changed);
        rep.min_reduced_value_seen = std::min(rep.min_reduced_value_seen, reduced_val);
        RandomSource sample_rng = rng.split(trial);
        Assignment recovered = rec_b.sample(sample_rng);
        rep.min_recovered_value = std::min(rep.min_recovered_value, value(src, recovered));
      }
    }
  }
  rep.ci_ok = rep.max_ci_ratio <= pass.declared_ci;
  rep.csigma_ok = rep.max_csigma_ratio <= pass.declared_csigma;
  return rep;
}

PipelineLedger compose(const std::vector<ReductionReport>& reports) {
  PipelineLedger ledger;
  ledger.stages = reports;
  ledger.ci_product = 1;
  ledger.csigma_product = 1;
  ledger.growth_factor = 1;
  ledger.all_passed = true;
  for (const auto& r : reports) {
    ledger.ci_product *= std::max(r.max_ci_ratio, Rational(1));
    ledger.csigma_product *= std::max(r.max_csigma_ratio, Rational(1));
    if (r.src_variables > 0)
      ledger.growth_factor *= (double)r.dst_variables / (double)r.src_variables;
    ledger.all_passed = ledger.all_passed && r.passed();
  }
  ledger.ci_csigma_product = ledger.ci_product * ledger.csigma_product;
  return ledger;
}

}  // namespace pcpforge
