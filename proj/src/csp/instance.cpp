#include "pcpforge/csp/instance.hpp"

#include <algorithm>
#include <set>

namespace pcpforge {

Instance::Instance(std::vector<std::pair<std::string, AlphabetPtr>> alphabets,
                   std::vector<int> var_alphabet, std::vector<Edge> edges,
                   std::optional<std::vector<VarId>> marked)
    : alphabets_(std::move(alphabets)),
      var_alphabet_(std::move(var_alphabet)),
      edges_(std::move(edges)),
      marked_(std::move(marked)) {
  validate();
}

Instance Instance::uniform(int n, AlphabetPtr alphabet, std::vector<Edge> edges,
                           std::optional<std::vector<VarId>> marked,
                           const std::string& alphabet_name) {
  return Instance({{alphabet_name, std::move(alphabet)}}, std::vector<int>((size_t)n, 0),
                  std::move(edges), std::move(marked));
}

void Instance::validate() const {
  std::set<std::string> names;
  for (auto& [name, alph] : alphabets_) {
    require(alph != nullptr, Errc::InvalidArgument, "null alphabet");
    require(names.insert(name).second, Errc::InvalidArgument, "duplicate alphabet name " + name);
  }
  for (int ai : var_alphabet_)
    require(ai >= 0 && ai < (int)alphabets_.size(), Errc::InvalidArgument,
            "variable refers to unknown alphabet");
  int n = num_variables();
  for (const auto& e : edges_) {
    require(e.rel != nullptr, Errc::InvalidArgument, "edge without relation");
    require((int)e.vars.size() == e.rel->arity(), Errc::ArityMismatch,
            "hyperedge length != relation arity");
    for (VarId v : e.vars)
      require(v >= 0 && v < n, Errc::UnknownVariable,
              "edge references variable " + std::to_string(v));
    require(e.weight >= 0, Errc::InvalidArgument, "negative edge weight");
    require(e.mult >= 1, Errc::InvalidArgument, "edge multiplicity must be positive");
  }
  if (marked_) {
    for (VarId v : *marked_)
      require(v >= 0 && v < n, Errc::UnknownVariable, "marked variable out of range");
    require(std::is_sorted(marked_->begin(), marked_->end()) &&
                std::adjacent_find(marked_->begin(), marked_->end()) == marked_->end(),
            Errc::InvalidArgument, "marked set must be sorted and unique");
  }
}

const Edge& Instance::edge(size_t i) const {
  require(i < edges_.size(), Errc::UnknownEdge, "edge index " + std::to_string(i));
  return edges_[i];
}

const AlphabetPtr& Instance::alphabet_of(VarId v) const {
  require(v >= 0 && v < num_variables(), Errc::UnknownVariable,
          "variable " + std::to_string(v));
  return alphabets_[(size_t)var_alphabet_[(size_t)v]].second;
}

const std::vector<VarId>& Instance::marked() const {
  require(marked_.has_value(), Errc::InvalidArgument, "instance has no marked set");
  return *marked_;
}

Rational Instance::total_weight() const {
  Rational w = 0;
  for (const auto& e : edges_) w += e.weight * (long)e.mult;
  return w;
}

bool Instance::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight == 1; });
}

std::vector<int64_t> Instance::degrees() const {
  std::vector<int64_t> deg((size_t)num_variables(), 0);
  for (const auto& e : edges_)
    for (VarId v : e.vars) deg[(size_t)v] += (int64_t)e.mult;
  return deg;
}

std::optional<int64_t> Instance::regular_degree() const {
  auto deg = degrees();
  if (deg.empty()) return std::nullopt;
  for (int64_t d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

bool Instance::is_binary() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.vars.size() == 2; });
}

bool Instance::same_hypergraph(const Instance& other) const {
  if (num_variables() != other.num_variables()) return false;
  for (int v = 0; v < num_variables(); ++v)
    if (alphabet_of(v)->fingerprint() != other.alphabet_of(v)->fingerprint()) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.vars != b.vars || a.weight != b.weight || a.mult != b.mult) return false;
  }
  return true;
}

void check_assignment(const Instance& inst, const Assignment& a) {
  require((int)a.values.size() == inst.num_variables(), Errc::UnknownVariable,
          "assignment size != variable count");
  for (int v = 0; v < inst.num_variables(); ++v)
    require(inst.alphabet_of(v)->contains(a.values[(size_t)v]), Errc::DomainMismatch,
            "label of variable " + std::to_string(v) + " outside its alphabet");
}

}  // namespace pcpforge
