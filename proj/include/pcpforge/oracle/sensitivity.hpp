#ifndef PCPFORGE_ORACLE_SENSITIVITY_HPP
#define PCPFORGE_ORACLE_SENSITIVITY_HPP

#include <functional>
#include <optional>
#include <string>

#include "pcpforge/oracle/emd.hpp"

namespace pcpforge {

// A replayable randomized map Instance -> Assignment.
struct CspAlgorithm {
  std::string name;
  bool deterministic = false;
  std::function<Assignment(const Instance&, uint64_t seed)> run;
};

enum class NeighborPolicy { Delete, Swap };

struct EdgeSensitivity {
  size_t edge = 0;
  NeighborPolicy policy = NeighborPolicy::Delete;
  Rational emd_estimate;    // empirical-transport estimate (exact for deterministic A)
  Rational coupling_bound;  // common-random-numbers upper bound
  uint64_t samples = 0;
};

struct SensitivityReport {
  std::string algorithm;
  NeighborPolicy policy = NeighborPolicy::Delete;
  uint64_t samples = 0;
  uint64_t seed = 0;
  std::vector<EdgeSensitivity> edges;
  Rational max_emd;  // measured sensitivity (max over edges)
};

// EMD between empirical output distributions of A on I and each neighbor
// (deleted or canonically swapped edge). Deterministic algorithms are
// evaluated once per instance (EMD = Hamming distance of the two outputs).
SensitivityReport estimate_sensitivity(const CspAlgorithm& alg, const Instance& inst,
                                       NeighborPolicy policy, uint64_t samples, uint64_t seed,
                                       std::optional<size_t> edge_subset_cap = std::nullopt);

// Canonical replacement relation used by the Swap policy: parity bits flip,
// everything else swaps to Trivial (or to Equality when already trivial).
RelationPtr canonical_swap(const Relation& rel);

// Empirical EMD between two runs of an algorithm on fixed instances.
Rational empirical_emd(const CspAlgorithm& alg, const Instance& a, const Instance& b,
                       uint64_t samples, uint64_t seed);

// Lemma "swap vs delete" consistency data for one edge: the swap EMD is at
// most delete(I,e) + delete(I^{e<-R},e) since both deletions land on the same
// instance.
struct SwapDeleteCheck {
  size_t edge = 0;
  Rational swap_emd;
  Rational delete_emd_base;
  Rational delete_emd_swapped;
  bool holds = false;  // swap_emd <= sum + tolerance
};

std::vector<SwapDeleteCheck> swap_vs_delete(const CspAlgorithm& alg, const Instance& inst,
                                            uint64_t samples, uint64_t seed,
                                            const Rational& tolerance);

}  // namespace pcpforge

#endif
