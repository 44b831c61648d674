#include "pcpforge/csp/distribution.hpp"

#include <algorithm>
#include <map>

namespace pcpforge {

static void check_marginal(const Marginal& m) {
  Rational sum = 0;
  for (auto& [lab, p] : m) {
    require(p >= 0, Errc::InvalidArgument, "negative probability");
    sum += p;
  }
  require(sum == 1, Errc::InvalidArgument, "marginal does not sum to 1");
}

AssignmentDistribution AssignmentDistribution::point_mass(Assignment a) {
  AssignmentDistribution d;
  d.form_ = Form::PointMass;
  d.point_ = std::move(a);
  return d;
}

AssignmentDistribution AssignmentDistribution::product(std::vector<Marginal> marginals) {
  for (auto& m : marginals) check_marginal(m);
  AssignmentDistribution d;
  d.form_ = Form::PerVertexProduct;
  d.marginals_ = std::move(marginals);
  return d;
}

AssignmentDistribution AssignmentDistribution::empirical(
    std::vector<std::pair<Assignment, Rational>> atoms) {
  require(!atoms.empty(), Errc::InvalidArgument, "empty empirical distribution");
  Rational sum = 0;
  for (auto& [a, p] : atoms) {
    require(p >= 0, Errc::InvalidArgument, "negative probability");
    require(a.values.size() == atoms.front().first.values.size(), Errc::DomainMismatch,
            "atoms over different variable sets");
    sum += p;
  }
  require(sum == 1, Errc::InvalidArgument, "empirical distribution does not sum to 1");
  // merge equal assignments
  std::map<Assignment, Rational> merged;
  for (auto& [a, p] : atoms) merged[a] += p;
  AssignmentDistribution d;
  d.form_ = Form::Empirical;
  for (auto& [a, p] : merged)
    if (p > 0) d.atoms_.push_back({a, p});
  return d;
}

int AssignmentDistribution::num_variables() const {
  switch (form_) {
    case Form::PointMass: return (int)point_.values.size();
    case Form::PerVertexProduct: return (int)marginals_.size();
    case Form::Empirical: return (int)atoms_.front().first.values.size();
  }
  return 0;
}

Marginal AssignmentDistribution::marginal(VarId v) const {
  require(v >= 0 && v < num_variables(), Errc::UnknownVariable, "marginal variable");
  switch (form_) {
    case Form::PointMass:
      return {{point_.values[(size_t)v], Rational(1)}};
    case Form::PerVertexProduct:
      return marginals_[(size_t)v];
    case Form::Empirical: {
      std::map<LabelValue, Rational> acc;
      for (auto& [a, p] : atoms_) acc[a.values[(size_t)v]] += p;
      Marginal out;
      for (auto& [lab, p] : acc)
        if (p > 0) out.push_back({lab, p});
      return out;
    }
  }
  return {};
}

Assignment AssignmentDistribution::sample(RandomSource& rng) const {
  switch (form_) {
    case Form::PointMass:
      return point_;
    case Form::PerVertexProduct: {
      Assignment a;
      a.values.reserve(marginals_.size());
      for (const auto& m : marginals_) {
        // common denominator draw keeps sampling exact
        BigInt den = 1;
        for (auto& [lab, p] : m) den = den * p.get_den() / gcd(den, p.get_den());
        BigInt total = 0;
        std::vector<BigInt> cum;
        for (auto& [lab, p] : m) {
          total += p.get_num() * (den / p.get_den());
          cum.push_back(total);
        }
        BigInt draw;
        if (total.fits_ulong_p()) {
          draw = (unsigned long)rng.uniform(total.get_ui());
        } else {
          // rejection-free: draw 64-bit chunks modulo total (bias negligible
          // only if total tiny relative to 2^64; totals here are small)
          draw = (unsigned long)rng.next_u64() % total;
        }
        size_t i = 0;
        while (draw >= cum[i]) ++i;
        a.values.push_back(m[i].first);
      }
      return a;
    }
    case Form::Empirical: {
      BigInt den = 1;
      for (auto& [a, p] : atoms_) den = den * p.get_den() / gcd(den, p.get_den());
      BigInt total = 0;
      std::vector<BigInt> cum;
      for (auto& [a, p] : atoms_) {
        total += p.get_num() * (den / p.get_den());
        cum.push_back(total);
      }
      BigInt draw;
      if (total.fits_ulong_p())
        draw = (unsigned long)rng.uniform(total.get_ui());
      else
        draw = (unsigned long)rng.next_u64() % total;
      size_t i = 0;
      while (draw >= cum[i]) ++i;
      return atoms_[i].first;
    }
  }
  return point_;
}

std::vector<std::pair<Assignment, Rational>> AssignmentDistribution::to_atoms(
    size_t max_support) const {
  switch (form_) {
    case Form::PointMass:
      return {{point_, Rational(1)}};
    case Form::Empirical:
      require(atoms_.size() <= max_support, Errc::SupportTooLarge, "empirical support");
      return atoms_;
    case Form::PerVertexProduct: {
      std::vector<std::pair<Assignment, Rational>> out;
      out.push_back({Assignment{}, Rational(1)});
      for (const auto& m : marginals_) {
        std::vector<std::pair<Assignment, Rational>> next;
        for (auto& [a, p] : out)
          for (auto& [lab, q] : m) {
            if (q == 0) continue;
            Assignment b = a;
            b.values.push_back(lab);
            next.push_back({std::move(b), p * q});
            require(next.size() <= max_support, Errc::SupportTooLarge, "product support");
          }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

Rational total_variation(const Marginal& a, const Marginal& b) {
  std::map<LabelValue, Rational> diff;
  for (auto& [lab, p] : a) diff[lab] += p;
  for (auto& [lab, p] : b) diff[lab] -= p;
  Rational sum = 0;
  for (auto& [lab, d] : diff) sum += abs(d);
  return sum / 2;
}

}  // namespace pcpforge
