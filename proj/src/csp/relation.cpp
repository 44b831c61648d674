#include "pcpforge/csp/relation.hpp"

#include <algorithm>

namespace pcpforge {

auto Relation::WalkCheck::operator<=>(const WalkCheck& o) const {
  if (auto c = a <=> o.a; c != 0) return c;
  if (auto c = b <=> o.b; c != 0) return c;
  return rel->fingerprint() <=> o.rel->fingerprint();
}

RelationPtr Relation::tuples(int arity, std::vector<std::vector<Label>> accept) {
  require(arity >= 1, Errc::InvalidArgument, "relation arity must be positive");
  for (auto& t : accept)
    require((int)t.size() == arity, Errc::ArityMismatch, "tuple length != relation arity");
  std::sort(accept.begin(), accept.end());
  accept.erase(std::unique(accept.begin(), accept.end()), accept.end());
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Tuples;
  r->arity_ = arity;
  r->accept_ = std::move(accept);
  r->seal();
  return r;
}

RelationPtr Relation::parity2(int target_bit) {
  require(target_bit == 0 || target_bit == 1, Errc::InvalidArgument, "parity bit");
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Parity2;
  r->arity_ = 2;
  r->parity_target_ = target_bit;
  r->seal();
  return r;
}

RelationPtr Relation::equality() {
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Equality;
  r->arity_ = 2;
  r->seal();
  return r;
}

RelationPtr Relation::trivial(int arity) {
  require(arity >= 1, Errc::InvalidArgument, "relation arity must be positive");
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Trivial;
  r->arity_ = arity;
  r->seal();
  return r;
}

RelationPtr Relation::projection(std::vector<Label> map) {
  require(!map.empty(), Errc::InvalidArgument, "projection over empty left alphabet");
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Projection;
  r->arity_ = 2;
  r->projection_ = std::move(map);
  r->seal();
  return r;
}

RelationPtr Relation::conjunction(int arity, std::vector<ConjunctPart> parts) {
  require(arity >= 1, Errc::InvalidArgument, "relation arity must be positive");
  for (auto& p : parts) {
    require((int)p.positions.size() == p.rel->arity(), Errc::ArityMismatch,
            "conjunct position count != component arity");
    for (int i : p.positions)
      require(i >= 0 && i < arity, Errc::InvalidArgument, "conjunct position out of range");
  }
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Conjunction;
  r->arity_ = arity;
  r->parts_ = std::move(parts);
  r->seal();
  return r;
}

RelationPtr Relation::walk(std::vector<WalkCheck> checks) {
  for (auto& c : checks)
    require(c.rel && c.rel->arity() == 2, Errc::ArityMismatch, "walk check must be binary");
  std::sort(checks.begin(), checks.end());
  checks.erase(std::unique(checks.begin(), checks.end(),
                           [](const WalkCheck& x, const WalkCheck& y) {
                             return x.a == y.a && x.b == y.b &&
                                    x.rel->fingerprint() == y.rel->fingerprint();
                           }),
               checks.end());
  auto r = std::make_shared<Relation>();
  r->kind_ = Kind::Walk;
  r->arity_ = 2;
  r->checks_ = std::move(checks);
  r->seal();
  return r;
}

bool Relation::accepts(std::span<const LabelValue> tuple) const {
  if ((int)tuple.size() != arity_) fail(Errc::ArityMismatch, "tuple length != relation arity");
  switch (kind_) {
    case Kind::Trivial:
      return true;
    case Kind::Parity2: {
      if (!tuple[0].is_plain() || !tuple[1].is_plain()) return false;
      return ((tuple[0].plain() + tuple[1].plain()) & 1) == parity_target_;
    }
    case Kind::Equality:
      return tuple[0] == tuple[1];
    case Kind::Projection: {
      if (!tuple[0].is_plain() || !tuple[1].is_plain()) return false;
      Label a = tuple[0].plain();
      if (a < 0 || a >= (Label)projection_.size()) return false;
      return projection_[(size_t)a] == tuple[1].plain();
    }
    case Kind::Tuples: {
      std::vector<Label> t(arity_);
      for (int i = 0; i < arity_; ++i) {
        if (!tuple[i].is_plain()) return false;
        t[i] = tuple[i].plain();
      }
      return std::binary_search(accept_.begin(), accept_.end(), t);
    }
    case Kind::Conjunction: {
      for (const auto& p : parts_) {
        std::vector<LabelValue> sub;
        sub.reserve(p.positions.size());
        for (int i : p.positions) sub.push_back(tuple[(size_t)i]);
        if (!p.rel->accepts(sub)) return false;
      }
      return true;
    }
    case Kind::Walk: {
      if (tuple[0].is_plain() || tuple[1].is_plain()) return false;
      const BallLabel& left = tuple[0].ball();
      const BallLabel& right = tuple[1].ball();
      for (const auto& c : checks_) {
        if (!left.has_opinion(c.a) || !right.has_opinion(c.b)) return false;
        LabelValue pair_arr[2] = {LabelValue(left.opinion(c.a)), LabelValue(right.opinion(c.b))};
        if (!c.rel->accepts(pair_arr)) return false;
      }
      return true;
    }
  }
  return false;
}

void Relation::seal() {
  std::string s;
  switch (kind_) {
    case Kind::Trivial:
      s = "triv/" + std::to_string(arity_);
      break;
    case Kind::Parity2:
      s = "par2/" + std::to_string(parity_target_);
      break;
    case Kind::Equality:
      s = "eq";
      break;
    case Kind::Projection:
      s = "proj[";
      for (Label a : projection_) s += std::to_string(a) + ",";
      s += "]";
      break;
    case Kind::Tuples:
      s = "tup/" + std::to_string(arity_) + "[";
      for (auto& t : accept_) {
        for (Label a : t) s += std::to_string(a) + ",";
        s += ";";
      }
      s += "]";
      break;
    case Kind::Conjunction:
      s = "conj/" + std::to_string(arity_) + "[";
      for (auto& p : parts_) {
        s += p.rel->fingerprint() + "@(";
        for (int i : p.positions) s += std::to_string(i) + ",";
        s += ");";
      }
      s += "]";
      break;
    case Kind::Walk:
      s = "walk[";
      for (auto& c : checks_)
        s += std::to_string(c.a) + ">" + std::to_string(c.b) + ":" + c.rel->fingerprint() + ";";
      s += "]";
      break;
  }
  fingerprint_ = std::move(s);
}

bool Relation::same_predicate(const Relation& a, const Relation& b,
                              std::span<const AlphabetPtr> alphabets, uint64_t cap) {
  if (a.arity() != b.arity()) return false;
  if (a.fingerprint() == b.fingerprint()) return true;
  require((int)alphabets.size() == a.arity(), Errc::ArityMismatch,
          "alphabet count != relation arity");
  // try exhaustive comparison over the declared tuple space
  uint64_t space = 1;
  bool enumerable = true;
  std::vector<std::vector<LabelValue>> vals;
  for (const auto& alph : alphabets) {
    try {
      vals.push_back(alph->enumerate(cap));
    } catch (const Error& e) {
      if (e.code() == Errc::TooLarge) {
        enumerable = false;
        break;
      }
      throw;
    }
    if (space > cap / std::max<uint64_t>(vals.back().size(), 1)) {
      enumerable = false;
      break;
    }
    space *= vals.back().size();
  }
  if (!enumerable || space > cap) return a.fingerprint() == b.fingerprint();
  std::vector<size_t> idx(alphabets.size(), 0);
  std::vector<LabelValue> tuple(alphabets.size());
  while (true) {
    for (size_t i = 0; i < idx.size(); ++i) tuple[i] = vals[i][idx[i]];
    if (a.accepts(tuple) != b.accepts(tuple)) return false;
    size_t p = idx.size();
    while (p > 0) {
      if (++idx[p - 1] < vals[p - 1].size()) break;
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  return true;
}

}  // namespace pcpforge
