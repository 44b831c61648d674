#ifndef PCPFORGE_CSP_LABEL_HPP
#define PCPFORGE_CSP_LABEL_HPP

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "pcpforge/error.hpp"

namespace pcpforge {

using VarId = int32_t;
using Label = int32_t;

// Label of a powered variable: an explicit sub-assignment ("opinions") on the
// t-ball of the center vertex. Stored sparse, never as an index into the
// exponential product alphabet.
struct BallLabel {
  // sorted by vertex id, unique keys
  std::vector<std::pair<VarId, Label>> opinions;

  bool has_opinion(VarId v) const;
  Label opinion(VarId v) const;  // fails with DomainMismatch if absent
  void set(VarId v, Label a);

  auto operator<=>(const BallLabel&) const = default;
};

class LabelValue {
 public:
  LabelValue() : v_(Label{0}) {}
  LabelValue(Label a) : v_(a) {}
  LabelValue(BallLabel b) : v_(std::move(b)) {}

  bool is_plain() const { return std::holds_alternative<Label>(v_); }
  Label plain() const {
    require(is_plain(), Errc::DomainMismatch, "structured label where plain expected");
    return std::get<Label>(v_);
  }
  const BallLabel& ball() const {
    require(!is_plain(), Errc::DomainMismatch, "plain label where ball label expected");
    return std::get<BallLabel>(v_);
  }

  auto operator<=>(const LabelValue&) const = default;

 private:
  std::variant<Label, BallLabel> v_;
};

}  // namespace pcpforge

#endif
