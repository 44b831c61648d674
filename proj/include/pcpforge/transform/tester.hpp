#ifndef PCPFORGE_TRANSFORM_TESTER_HPP
#define PCPFORGE_TRANSFORM_TESTER_HPP

#include <array>
#include <map>
#include <optional>

#include "pcpforge/csp/instance.hpp"
#include "pcpforge/transform/circuit.hpp"

namespace pcpforge {

// Table cell index: s in {0,1}^k for L, t in {0,1}^{k^2} for Q, bit-packed.
using CellKey = std::vector<uint64_t>;

struct TesterOptions {
  // Families 2/3 are enumerated exactly only for k <= exact_k_cap (the 2^{2k^2}
  // pair space is infeasible beyond); above it they are sampled uniformly.
  int exact_k_cap = 3;
  int hard_k_cap = 64;  // beyond this even lazy Q-cell keys get impractical
  uint64_t family_budget = 512;       // samples per family when sampling
  uint64_t family_exact_cap = 1u << 22;  // enumerate a family exactly up to this count
  uint64_t dense_table_cap = 1u << 20;   // dense L/Q blocks up to this cell count
  uint64_t padding_cap = 1u << 16;       // emit step-4 padding up to this slot count
  uint64_t seed = 0;                     // sampling seed (shared across edges)
};

struct TesterLayout {
  int k = 0;        // |X| + |C|
  int num_x = 0;    // |X|
  int num_gates = 0;
  VarId x_begin = 0;
  VarId y_begin = 0;

  bool l_dense = false, q_dense = false;
  VarId l_begin = 0, q_begin = 0;   // dense blocks
  std::map<CellKey, VarId> l_cells;  // lazy cells (also filled for dense)
  std::map<CellKey, VarId> q_cells;

  std::array<Rational, 5> weights;  // w1..w5
  BigInt normalizer;                // N = lcm(1/w_i)
  std::array<std::pair<size_t, size_t>, 5> family_range;  // [begin,end) edge slices
  std::array<bool, 5> family_sampled{};
  uint64_t alpha = 0;        // max cell occurrences among step-4 constraints
  BigInt padding_slots = 0;  // step-4 slots without a constraint
  bool padding_emitted = false;
  size_t padding_begin = 0, padding_end = 0;

  int num_variables = 0;

  VarId x_var(int i) const { return x_begin + (VarId)i; }
  VarId l_var(const CellKey& s) const;
  VarId q_var(const CellKey& t) const;
};

struct TesterResult {
  Instance instance;  // Boolean variables X, Y, L, Q; arity 3..6 constraints
  TesterLayout layout;
};

// Dinur-style assignment tester for `circuit`: Hadamard tables L (2^k cells)
// and Q (2^{k^2} cells), BLR linearity tests, tensor consistency via
// self-correction, the r-random-combination circuit check, X-consistency, and
// trivial step-4 padding. Tables are materialized lazily; only touched cells
// become variables. Fails with TesterTooLarge above hard_k_cap.
TesterResult assignment_tester(const Circuit& circuit, const TesterOptions& opts = {});

// Completeness witness: tables of the (assumed satisfying) input alpha.
Assignment tester_lift(const Circuit& circuit, const TesterLayout& layout,
                       const std::vector<int>& alpha);

// Sum of violated edge weight (times multiplicity), not normalized.
Rational violated_weight(const Instance& inst, const Assignment& a);
// Same, restricted to one family's edge slice.
Rational violated_weight_in(const Instance& inst, const Assignment& a, size_t begin, size_t end);

}  // namespace pcpforge

#endif
