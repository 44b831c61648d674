#ifndef PCPFORGE_CSP_DISTRIBUTION_HPP
#define PCPFORGE_CSP_DISTRIBUTION_HPP

#include <vector>

#include "pcpforge/csp/instance.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

// One variable's exact label distribution, sparse over its alphabet.
using Marginal = std::vector<std::pair<LabelValue, Rational>>;

// Finitely supported distribution over assignments, in one of three exact
// forms. Probabilities always sum to exactly 1.
class AssignmentDistribution {
 public:
  enum class Form { PointMass, PerVertexProduct, Empirical };

  static AssignmentDistribution point_mass(Assignment a);
  static AssignmentDistribution product(std::vector<Marginal> marginals);
  static AssignmentDistribution empirical(std::vector<std::pair<Assignment, Rational>> atoms);

  Form form() const { return form_; }
  int num_variables() const;

  const Assignment& point() const { return point_; }
  const std::vector<Marginal>& marginals() const { return marginals_; }
  const std::vector<std::pair<Assignment, Rational>>& atoms() const { return atoms_; }

  // Exact marginal of one variable (computed for any form; Empirical models
  // may be exponential in principle but are finitely supported here).
  Marginal marginal(VarId v) const;

  Assignment sample(RandomSource& rng) const;

  // Lowers PointMass/Product forms to an explicit atom list; fails with
  // SupportTooLarge if the support would exceed max_support.
  std::vector<std::pair<Assignment, Rational>> to_atoms(size_t max_support) const;

 private:
  Form form_ = Form::PointMass;
  Assignment point_;
  std::vector<Marginal> marginals_;
  std::vector<std::pair<Assignment, Rational>> atoms_;
};

// Exact total variation distance between two sparse marginals.
Rational total_variation(const Marginal& a, const Marginal& b);

}  // namespace pcpforge

#endif
