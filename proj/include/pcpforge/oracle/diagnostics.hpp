#ifndef PCPFORGE_ORACLE_DIAGNOSTICS_HPP
#define PCPFORGE_ORACLE_DIAGNOSTICS_HPP

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

// Monte Carlo estimates of the powering walk statistics for a fixed source
// assignment: walk length S, faulty steps N (violated edge with both windows
// within distance t of the endpoints), truncated N* = N 1[S <= B].
struct PoweringDiagnostics {
  uint64_t samples = 0;
  int t = 1, max_len = 0;
  size_t faulty_edges = 0;  // |F_sigma|, counted with multiplicity

  double mean_len = 0, se_len = 0;            // E[S], standard error
  double pr_len_gt_b = 0, se_len_gt_b = 0;    // Pr[S > B]
  double mean_n = 0;                          // E[N]
  double mean_nstar = 0, se_nstar = 0;        // E[N*]
  double mean_nstar_sq = 0, se_nstar_sq = 0;  // E[(N*)^2]
  double pr_nstar_pos = 0, se_nstar_pos = 0;  // Pr[N* > 0]

  // second-moment inequality Pr[N*>0] >= E[N*]^2 / E[(N*)^2]
  double second_moment_rhs = 0;
  bool second_moment_ok = false;

  // informational: E[N*] * 1600 |Sigma|^2 m / (t |F_sigma|), >= 1 when the
  // asymptotic lower-bound constant holds at this scale
  double faulty_lower_bound_ratio = 0;
};

PoweringDiagnostics powering_diagnostics(const Instance& inst, const Assignment& sigma, int t,
                                         int max_len, uint64_t samples, uint64_t seed);

}  // namespace pcpforge

#endif
