#ifndef PCPFORGE_GEN_GENERATORS_HPP
#define PCPFORGE_GEN_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

struct CycleSpec {
  int n = 4;                  // even, >= 4
  std::vector<int> pattern;   // n parity bits, one per cycle edge
};

CycleSpec all_ones_cycle(int n);

// n-vertex E2LIN cycle: edge i = (v_i, v_{i+1 mod n}) carrying Parity2(pattern[i]).
Instance e2lin_cycle(const CycleSpec& spec);

// The adversarial pair (I, I~): I all-Parity2(1); I~ flips the relations at
// edges (v_{n/2}, v_{n/2+1}) and (v_n, v_1). Swap distance 2, both satisfiable.
std::pair<Instance, Instance> lemma41_pair(int n);

enum class RelationFamily { Parity, PlantedSatisfiable, RandomTuples };

Instance random_instance(int n, int m, int alphabet_size, RelationFamily family, uint64_t seed);

// Random d-regular binary instance via the configuration model, with parity
// relations planted to satisfy a random assignment. Deterministic given seed.
Instance random_regular_planted(int n, int d, uint64_t seed);

// Random satisfiable label cover: left/right parts, projection relations
// consistent with a planted assignment. Variables 0..nu-1 are left.
Instance random_label_cover(int nu, int nv, int m, int sigma_u, int sigma_v, uint64_t seed);

}  // namespace pcpforge

#endif
