#include "pcpforge/csp/alphabet.hpp"

#include <algorithm>
#include <set>

namespace pcpforge {

bool BallLabel::has_opinion(VarId v) const {
  auto it = std::lower_bound(opinions.begin(), opinions.end(), v,
                             [](const auto& p, VarId x) { return p.first < x; });
  return it != opinions.end() && it->first == v;
}

Label BallLabel::opinion(VarId v) const {
  auto it = std::lower_bound(opinions.begin(), opinions.end(), v,
                             [](const auto& p, VarId x) { return p.first < x; });
  require(it != opinions.end() && it->first == v, Errc::DomainMismatch,
          "no opinion on vertex " + std::to_string(v));
  return it->second;
}

void BallLabel::set(VarId v, Label a) {
  auto it = std::lower_bound(opinions.begin(), opinions.end(), v,
                             [](const auto& p, VarId x) { return p.first < x; });
  if (it != opinions.end() && it->first == v)
    it->second = a;
  else
    opinions.insert(it, {v, a});
}

AlphabetPtr Alphabet::boolean() {
  auto a = std::make_shared<Alphabet>();
  a->kind_ = Kind::Boolean;
  a->labels_ = {0, 1};
  return a;
}

AlphabetPtr Alphabet::explicit_labels(std::vector<Label> labels) {
  require(!labels.empty(), Errc::InvalidArgument, "explicit alphabet must be non-empty");
  std::set<Label> uniq(labels.begin(), labels.end());
  require(uniq.size() == labels.size(), Errc::InvalidArgument,
          "explicit alphabet has duplicate labels");
  auto a = std::make_shared<Alphabet>();
  a->kind_ = Kind::Explicit;
  a->labels_ = std::move(labels);
  return a;
}

AlphabetPtr Alphabet::range(Label k) {
  std::vector<Label> v(k);
  for (Label i = 0; i < k; ++i) v[i] = i;
  return explicit_labels(std::move(v));
}

AlphabetPtr Alphabet::product(AlphabetPtr base, int arity) {
  require(base != nullptr && arity >= 1, Errc::InvalidArgument, "product alphabet");
  auto a = std::make_shared<Alphabet>();
  a->kind_ = Kind::Product;
  a->base_ = std::move(base);
  a->product_arity_ = arity;
  return a;
}

AlphabetPtr Alphabet::ball(std::vector<VarId> domain, AlphabetPtr base) {
  require(!domain.empty() && base != nullptr, Errc::InvalidArgument, "ball alphabet");
  require(std::is_sorted(domain.begin(), domain.end()) &&
              std::adjacent_find(domain.begin(), domain.end()) == domain.end(),
          Errc::InvalidArgument, "ball domain must be sorted and unique");
  auto a = std::make_shared<Alphabet>();
  a->kind_ = Kind::Ball;
  a->ball_domain_ = std::move(domain);
  a->base_ = std::move(base);
  return a;
}

bool Alphabet::contains(const LabelValue& v) const {
  switch (kind_) {
    case Kind::Boolean:
      return v.is_plain() && (v.plain() == 0 || v.plain() == 1);
    case Kind::Explicit:
      return v.is_plain() &&
             std::find(labels_.begin(), labels_.end(), v.plain()) != labels_.end();
    case Kind::Product:
      // Product labels are encoded as ball labels over positions 0..arity-1.
      if (v.is_plain()) return false;
      {
        const auto& b = v.ball();
        if ((int)b.opinions.size() != product_arity_) return false;
        for (int i = 0; i < product_arity_; ++i) {
          if (b.opinions[i].first != i) return false;
          if (!base_->contains(LabelValue(b.opinions[i].second))) return false;
        }
        return true;
      }
    case Kind::Ball: {
      if (v.is_plain()) return false;
      const auto& b = v.ball();
      if (b.opinions.size() != ball_domain_.size()) return false;
      for (size_t i = 0; i < ball_domain_.size(); ++i) {
        if (b.opinions[i].first != ball_domain_[i]) return false;
        if (!base_->contains(LabelValue(b.opinions[i].second))) return false;
      }
      return true;
    }
  }
  return false;
}

uint64_t Alphabet::size(uint64_t cap) const {
  switch (kind_) {
    case Kind::Boolean:
    case Kind::Explicit:
      return labels_.size();
    case Kind::Product:
    case Kind::Ball: {
      uint64_t b = base_->size(cap);
      uint64_t e = kind_ == Kind::Product ? (uint64_t)product_arity_ : ball_domain_.size();
      uint64_t out = 1;
      for (uint64_t i = 0; i < e; ++i) {
        if (out > cap / std::max<uint64_t>(b, 1)) fail(Errc::TooLarge, "alphabet size over cap");
        out *= b;
      }
      require(out <= cap, Errc::TooLarge, "alphabet size over cap");
      return out;
    }
  }
  return 0;
}

std::vector<LabelValue> Alphabet::enumerate(uint64_t cap) const {
  uint64_t n = size(cap);
  std::vector<LabelValue> out;
  out.reserve(n);
  if (kind_ == Kind::Boolean || kind_ == Kind::Explicit) {
    for (Label a : labels_) out.emplace_back(a);
    return out;
  }
  std::vector<VarId> dom;
  if (kind_ == Kind::Ball)
    dom = ball_domain_;
  else
    for (int i = 0; i < product_arity_; ++i) dom.push_back(i);
  auto base_vals = base_->enumerate(cap);
  for (auto& v : base_vals)
    require(v.is_plain(), Errc::TooLarge, "nested structured alphabets not enumerable");
  // odometer over positions, most-significant first
  std::vector<size_t> idx(dom.size(), 0);
  while (true) {
    BallLabel b;
    for (size_t i = 0; i < dom.size(); ++i) b.opinions.push_back({dom[i], base_vals[idx[i]].plain()});
    out.emplace_back(std::move(b));
    size_t p = dom.size();
    while (p > 0) {
      if (++idx[p - 1] < base_vals.size()) break;
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) break;
  }
  return out;
}

std::string Alphabet::fingerprint() const {
  std::string s;
  switch (kind_) {
    case Kind::Boolean:
      return "bool";
    case Kind::Explicit:
      s = "ex[";
      for (Label a : labels_) s += std::to_string(a) + ",";
      return s + "]";
    case Kind::Product:
      return "prod[" + std::to_string(product_arity_) + ";" + base_->fingerprint() + "]";
    case Kind::Ball:
      s = "ball[";
      for (VarId v : ball_domain_) s += std::to_string(v) + ",";
      return s + ";" + base_->fingerprint() + "]";
  }
  return s;
}

}  // namespace pcpforge
