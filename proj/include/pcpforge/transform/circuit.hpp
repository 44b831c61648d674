#ifndef PCPFORGE_TRANSFORM_CIRCUIT_HPP
#define PCPFORGE_TRANSFORM_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "pcpforge/error.hpp"

namespace pcpforge {

// Boolean circuit over AND/OR/NOT. Wire ids: inputs 0..num_inputs-1, then one
// wire per gate. Children precede parents.
struct Gate {
  enum class Op { And, Or, Not };
  Op op = Op::And;
  int a = 0;  // child wire
  int b = 0;  // second child (ignored for Not)
};

class Circuit {
 public:
  Circuit(int num_inputs, std::vector<Gate> gates, int output);

  int num_inputs() const { return num_inputs_; }
  int num_gates() const { return (int)gates_.size(); }
  int num_wires() const { return num_inputs_ + num_gates(); }
  int output() const { return output_; }
  const std::vector<Gate>& gates() const { return gates_; }

  bool eval(const std::vector<int>& inputs) const;
  // All wire values (inputs then gates).
  std::vector<int> eval_wires(const std::vector<int>& inputs) const;

  // Appends no-op gates (AND of input 0 with itself, feeding nothing) until
  // the gate count reaches target.
  Circuit padded(int target_gates) const;

 private:
  int num_inputs_ = 0;
  std::vector<Gate> gates_;
  int output_ = 0;
};

// Quadratic polynomial over GF(2) in k variables: c0 + sum s_i z_i + sum
// t_ij z_i z_j. Bits packed little-endian into words.
struct QuadPoly {
  int k = 0;
  int c0 = 0;
  std::vector<uint64_t> lin;   // k bits
  std::vector<uint64_t> quad;  // k*k bits, index i*k+j

  int eval(const std::vector<int>& z) const;
};

// Per-gate quadratic equations over z = (inputs, gate values); the output
// gate's equation has z_out substituted by 1, so that C(x) = 1 iff some gate
// assignment zeroes every polynomial. |result| = |C|.
std::vector<QuadPoly> arithmetize(const Circuit& c);

inline bool get_bit(const std::vector<uint64_t>& bits, uint64_t i) {
  return bits[i >> 6] >> (i & 63) & 1;
}
inline void flip_bit(std::vector<uint64_t>& bits, uint64_t i) { bits[i >> 6] ^= 1ULL << (i & 63); }
inline std::vector<uint64_t> zero_bits(uint64_t n) {
  return std::vector<uint64_t>((size_t)((n + 63) / 64), 0);
}

}  // namespace pcpforge

#endif
