#ifndef PCPFORGE_CSP_RELATION_HPP
#define PCPFORGE_CSP_RELATION_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pcpforge/csp/alphabet.hpp"
#include "pcpforge/csp/label.hpp"

namespace pcpforge {

class Relation;
using RelationPtr = std::shared_ptr<const Relation>;

// A constraint predicate over an ordered tuple of positions. Membership is
// total: any well-typed tuple gets an accept/reject answer.
class Relation {
 public:
  enum class Kind { Tuples, Parity2, Equality, Trivial, Projection, Conjunction, Walk };

  struct ConjunctPart {
    RelationPtr rel;
    std::vector<int> positions;  // indices into the conjunction's tuple
  };
  // One per-step check of a powered constraint: read the left ball label's
  // opinion on `a` and the right one's opinion on `b`, test against rel.
  struct WalkCheck {
    VarId a = 0;
    VarId b = 0;
    RelationPtr rel;
    auto operator<=>(const WalkCheck&) const;
  };

  static RelationPtr tuples(int arity, std::vector<std::vector<Label>> accept);
  static RelationPtr parity2(int target_bit);
  static RelationPtr equality();
  static RelationPtr trivial(int arity);
  static RelationPtr projection(std::vector<Label> map);  // map[left label] -> right label
  static RelationPtr conjunction(int arity, std::vector<ConjunctPart> parts);
  static RelationPtr walk(std::vector<WalkCheck> checks);

  Kind kind() const { return kind_; }
  int arity() const { return arity_; }
  bool accepts(std::span<const LabelValue> tuple) const;

  int parity_target() const { return parity_target_; }
  const std::vector<std::vector<Label>>& accept_tuples() const { return accept_; }
  const std::vector<Label>& projection_map() const { return projection_; }
  const std::vector<ConjunctPart>& parts() const { return parts_; }
  const std::vector<WalkCheck>& checks() const { return checks_; }

  // Canonical textual key. Structurally equal relations (after tuple-set
  // sorting) share a fingerprint.
  const std::string& fingerprint() const { return fingerprint_; }

  // Extensional comparison over the declared per-position alphabets when the
  // tuple space fits under cap, structural fingerprint otherwise.
  static bool same_predicate(const Relation& a, const Relation& b,
                             std::span<const AlphabetPtr> alphabets,
                             uint64_t cap = kDefaultEnumCap);

 private:
  void seal();  // computes fingerprint

  Kind kind_ = Kind::Trivial;
  int arity_ = 0;
  int parity_target_ = 0;
  std::vector<std::vector<Label>> accept_;
  std::vector<Label> projection_;
  std::vector<ConjunctPart> parts_;
  std::vector<WalkCheck> checks_;
  std::string fingerprint_;
};

}  // namespace pcpforge

#endif
