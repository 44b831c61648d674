#include "pcpforge/oracle/brute_force.hpp"

namespace pcpforge {

namespace {

struct AssignmentSpace {
  std::vector<std::vector<LabelValue>> domains;
  uint64_t total = 1;
};

AssignmentSpace space_of(const Instance& inst, uint64_t cap) {
  AssignmentSpace s;
  for (int v = 0; v < inst.num_variables(); ++v) {
    s.domains.push_back(inst.alphabet_of(v)->enumerate(cap));
    uint64_t k = s.domains.back().size();
    require(k >= 1, Errc::InvalidArgument, "empty alphabet");
    require(s.total <= cap / k, Errc::TooLarge, "assignment space over brute-force cap");
    s.total *= k;
  }
  return s;
}

// Iterates assignments in lexicographic order of the label tuples.
template <typename F>
void for_each_assignment(const AssignmentSpace& s, F&& fn) {
  size_t n = s.domains.size();
  std::vector<size_t> idx(n, 0);
  Assignment a;
  a.values.resize(n);
  for (size_t i = 0; i < n; ++i) a.values[i] = s.domains[i][0];
  while (true) {
    fn(a);
    size_t p = n;
    while (p > 0) {
      if (++idx[p - 1] < s.domains[p - 1].size()) {
        a.values[p - 1] = s.domains[p - 1][idx[p - 1]];
        break;
      }
      idx[p - 1] = 0;
      a.values[p - 1] = s.domains[p - 1][0];
      --p;
    }
    if (p == 0) break;
  }
}

}  // namespace

OptResult brute_force_opt(const Instance& inst, uint64_t cap) {
  require(inst.total_weight() > 0, Errc::EmptyInstance, "opt undefined: no constraint weight");
  AssignmentSpace s = space_of(inst, cap);

  // integer satisfied-weight accumulation over a common denominator
  BigInt den = 1;
  for (const auto& e : inst.edges()) {
    const BigInt& d = e.weight.get_den();
    den = den * d / gcd(den, d);
  }
  std::vector<BigInt> w;
  w.reserve(inst.num_edges());
  BigInt total = 0;
  for (const auto& e : inst.edges()) {
    BigInt x = e.weight.get_num() * (den / e.weight.get_den()) * (long)e.mult;
    total += x;
    w.push_back(std::move(x));
  }

  BigInt best = -1;
  Assignment best_a;
  for_each_assignment(s, [&](const Assignment& a) {
    BigInt sat = 0;
    for (size_t i = 0; i < inst.num_edges(); ++i)
      if (edge_satisfied(inst, inst.edges()[i], a)) sat += w[i];
    if (sat > best) {
      best = sat;
      best_a = a;
    }
  });
  Rational opt(best, total);
  opt.canonicalize();
  return {opt, std::move(best_a)};
}

std::vector<Assignment> enumerate_satisfying(const Instance& inst, uint64_t cap) {
  AssignmentSpace s = space_of(inst, cap);
  std::vector<Assignment> out;
  for_each_assignment(s, [&](const Assignment& a) {
    for (const auto& e : inst.edges())
      if (!edge_satisfied(inst, e, a)) return;
    out.push_back(a);
  });
  return out;
}

}  // namespace pcpforge
