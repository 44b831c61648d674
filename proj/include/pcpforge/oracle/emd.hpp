#ifndef PCPFORGE_ORACLE_EMD_HPP
#define PCPFORGE_ORACLE_EMD_HPP

#include "pcpforge/csp/distribution.hpp"

namespace pcpforge {

inline constexpr size_t kEmdSupportCap = 256;

// Exact optimal coupling under the Hamming ground metric.
struct TransportPlan {
  std::vector<std::pair<Assignment, Rational>> left;   // support of d1
  std::vector<std::pair<Assignment, Rational>> right;  // support of d2
  std::vector<std::vector<Rational>> flow;             // left x right, sums match marginals
  Rational cost;                                       // sum flow(i,j) * Ham(i,j)
};

// Exact EMD between finitely supported distributions (PointMass/Empirical;
// products are lowered when their support fits). SupportTooLarge above cap.
TransportPlan emd_exact(const AssignmentDistribution& d1, const AssignmentDistribution& d2,
                        size_t support_cap = kEmdSupportCap);

// Per-vertex total-variation upper bound: sum_v TV(marginal_v, marginal~_v).
// An upper bound on true EMD for product-form (or any) distributions.
Rational emd_upper_product(const AssignmentDistribution& d1, const AssignmentDistribution& d2);

}  // namespace pcpforge

#endif
