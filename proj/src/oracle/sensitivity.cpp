#include "pcpforge/oracle/sensitivity.hpp"

#include <map>

#include "pcpforge/csp/ops.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

RelationPtr canonical_swap(const Relation& rel) {
  if (rel.kind() == Relation::Kind::Parity2)
    return Relation::parity2(1 - rel.parity_target());
  if (rel.kind() == Relation::Kind::Trivial) return Relation::equality();
  return Relation::trivial(rel.arity());
}

namespace {

AssignmentDistribution empirical_outputs(const CspAlgorithm& alg, const Instance& inst,
                                         uint64_t samples, uint64_t seed) {
  if (alg.deterministic)
    return AssignmentDistribution::point_mass(alg.run(inst, seed));
  std::map<Assignment, long> hist;
  for (uint64_t i = 0; i < samples; ++i) ++hist[alg.run(inst, derive_seed(seed, i))];
  std::vector<std::pair<Assignment, Rational>> atoms;
  for (auto& [a, c] : hist) atoms.push_back({a, rat(c, (long)samples)});
  return AssignmentDistribution::empirical(std::move(atoms));
}

}  // namespace

Rational empirical_emd(const CspAlgorithm& alg, const Instance& a, const Instance& b,
                       uint64_t samples, uint64_t seed) {
  auto da = empirical_outputs(alg, a, samples, seed);
  auto db = empirical_outputs(alg, b, samples, derive_seed(seed, "b-side"));
  return emd_exact(da, db).cost;
}

SensitivityReport estimate_sensitivity(const CspAlgorithm& alg, const Instance& inst,
                                       NeighborPolicy policy, uint64_t samples, uint64_t seed,
                                       std::optional<size_t> edge_subset_cap) {
  require(inst.num_edges() > 0, Errc::EmptyInstance, "sensitivity of edgeless instance");
  SensitivityReport rep;
  rep.algorithm = alg.name;
  rep.policy = policy;
  rep.samples = alg.deterministic ? 1 : samples;
  rep.seed = seed;
  rep.max_emd = 0;

  std::vector<size_t> edge_ids;
  for (size_t e = 0; e < inst.num_edges(); ++e) edge_ids.push_back(e);
  if (edge_subset_cap && edge_ids.size() > *edge_subset_cap) {
    RandomSource rng(derive_seed(seed, "edges"));
    for (size_t i = edge_ids.size(); i > 1; --i)
      std::swap(edge_ids[i - 1], edge_ids[rng.uniform(i)]);
    edge_ids.resize(*edge_subset_cap);
    std::sort(edge_ids.begin(), edge_ids.end());
  }

  auto base = empirical_outputs(alg, inst, samples, derive_seed(seed, "base"));
  for (size_t e : edge_ids) {
    Instance neighbor = policy == NeighborPolicy::Delete
                            ? delete_constraint(inst, e)
                            : swap_constraint(inst, e, canonical_swap(*inst.edges()[e].rel));
    auto other = empirical_outputs(alg, neighbor, samples, derive_seed(seed, "n" + std::to_string(e)));
    EdgeSensitivity row;
    row.edge = e;
    row.policy = policy;
    row.samples = rep.samples;
    row.emd_estimate = emd_exact(base, other).cost;
    // common-random-numbers coupling: pair runs by seed, average the Hamming
    if (alg.deterministic) {
      row.coupling_bound = row.emd_estimate;
    } else {
      Rational total = 0;
      for (uint64_t i = 0; i < samples; ++i) {
        uint64_t s = derive_seed(seed, "couple" + std::to_string(i));
        total += hamming(alg.run(inst, s), alg.run(neighbor, s));
      }
      row.coupling_bound = total / (long)samples;
    }
    rep.max_emd = std::max(rep.max_emd, row.emd_estimate);
    rep.edges.push_back(std::move(row));
  }
  return rep;
}

std::vector<SwapDeleteCheck> swap_vs_delete(const CspAlgorithm& alg, const Instance& inst,
                                            uint64_t samples, uint64_t seed,
                                            const Rational& tolerance) {
  std::vector<SwapDeleteCheck> out;
  for (size_t e = 0; e < inst.num_edges(); ++e) {
    Instance swapped = swap_constraint(inst, e, canonical_swap(*inst.edges()[e].rel));
    Instance deleted = delete_constraint(inst, e);
    SwapDeleteCheck row;
    row.edge = e;
    row.swap_emd = empirical_emd(alg, inst, swapped, samples, derive_seed(seed, 3 * e));
    row.delete_emd_base = empirical_emd(alg, inst, deleted, samples, derive_seed(seed, 3 * e + 1));
    row.delete_emd_swapped =
        empirical_emd(alg, swapped, deleted, samples, derive_seed(seed, 3 * e + 2));
    row.holds = row.swap_emd <= row.delete_emd_base + row.delete_emd_swapped + tolerance;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace pcpforge
