#ifndef PCPFORGE_CSP_ALPHABET_HPP
#define PCPFORGE_CSP_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pcpforge/csp/label.hpp"
#include "pcpforge/rational.hpp"

namespace pcpforge {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// Default cap on alphabet/relation enumerations (labels, not bytes).
inline constexpr uint64_t kDefaultEnumCap = 1u << 22;

class Alphabet {
 public:
  enum class Kind { Explicit, Boolean, Product, Ball };

  static AlphabetPtr boolean();
  static AlphabetPtr explicit_labels(std::vector<Label> labels);
  // Dense labels 0..k-1.
  static AlphabetPtr range(Label k);
  static AlphabetPtr product(AlphabetPtr base, int arity);
  // domain must be sorted and unique; base is the per-vertex alphabet.
  static AlphabetPtr ball(std::vector<VarId> domain, AlphabetPtr base);

  Kind kind() const { return kind_; }
  const std::vector<Label>& labels() const { return labels_; }           // Explicit/Boolean
  const std::vector<VarId>& ball_domain() const { return ball_domain_; }  // Ball
  AlphabetPtr base() const { return base_; }                              // Product/Ball
  int product_arity() const { return product_arity_; }

  bool contains(const LabelValue& v) const;

  // Number of labels; fails with TooLarge if it exceeds cap.
  uint64_t size(uint64_t cap = kDefaultEnumCap) const;

  // All labels in deterministic order; fails with TooLarge above cap.
  std::vector<LabelValue> enumerate(uint64_t cap = kDefaultEnumCap) const;

  // Canonical serialization key; equal keys <=> same alphabet.
  std::string fingerprint() const;

 private:
  Kind kind_ = Kind::Boolean;
  std::vector<Label> labels_;
  std::vector<VarId> ball_domain_;
  AlphabetPtr base_;
  int product_arity_ = 0;
};

}  // namespace pcpforge

#endif
