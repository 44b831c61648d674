#ifndef PCPFORGE_TRANSFORM_ALPHABET_REDUCE_HPP
#define PCPFORGE_TRANSFORM_ALPHABET_REDUCE_HPP

#include "pcpforge/transform/sparsify.hpp"
#include "pcpforge/transform/tester.hpp"

namespace pcpforge {

// Hadamard codebook used to encode one source variable's alphabet: message
// bits b = ceil(log2 |Sigma|), codeword length ell = 2^b <= 64.
struct HadamardCodebook {
  int b = 1;
  int ell = 2;
  std::vector<uint64_t> codewords;  // one per label index, ell bits each

  static HadamardCodebook for_size(uint64_t alphabet_size);
  uint64_t encode(int label_index) const { return codewords[(size_t)label_index]; }
};

struct AlphabetReduceMap {
  HadamardCodebook code;                    // shared across variables (padded ell)
  std::vector<std::vector<VarId>> x_block;  // source variable -> its ell X-variable ids
  std::vector<std::vector<LabelValue>> source_labels;  // per variable, index -> label
  int fallback_index = 0;                   // lexicographically smallest label
  std::vector<TesterLayout> per_edge;       // layout of each edge's tester (local ids)
  std::vector<VarId> edge_var_offset;       // local tester id + offset -> global id (non-X)
  int circuit_size = 0;                     // padded |C_e|, uniform across edges
  int k = 0;
};

struct AlphabetReduceResult {
  Instance instance;  // binary, over Booleans and the sparsification alphabets
  AlphabetReduceMap map;
  SparsifyResult sparsified;  // bookkeeping for lifts
};

// Per-edge assignment tester over shared Hadamard-encoded endpoint blocks,
// all circuits padded to one size, then sparsified to binary constraints.
// Fails with TesterTooLarge when k exceeds the tester caps.
AlphabetReduceResult alphabet_reduce(const Instance& inst, const TesterOptions& opts = {});

// Completeness lift through encode + tester tables + sparsification views.
Assignment alphabet_reduce_lift(const AlphabetReduceResult& ar, const Instance& source,
                                const Assignment& sigma);

}  // namespace pcpforge

#endif
