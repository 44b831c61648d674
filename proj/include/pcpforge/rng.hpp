#ifndef PCPFORGE_RNG_HPP
#define PCPFORGE_RNG_HPP

#include <cstdint>
#include <string>

namespace pcpforge {

// splitmix64 step; used both as a PRNG core and for deriving task seeds so
// that results are independent of worker count and standard-library version.
uint64_t splitmix64(uint64_t& state);

uint64_t derive_seed(uint64_t master, uint64_t stream);
uint64_t derive_seed(uint64_t master, const std::string& tag);

class RandomSource {
 public:
  explicit RandomSource(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, n) without modulo bias.
  uint64_t uniform(uint64_t n);

  // Bernoulli(num/den) decided by one uniform draw in [0, den).
  bool bernoulli(uint64_t num, uint64_t den) { return uniform(den) < num; }

  double uniform_real() { return (next_u64() >> 11) * 0x1.0p-53; }

  RandomSource split(uint64_t stream) const { return RandomSource(derive_seed(state_, stream)); }

 private:
  uint64_t state_;
};

}  // namespace pcpforge

#endif
