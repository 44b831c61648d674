#ifndef PCPFORGE_CSP_INSTANCE_HPP
#define PCPFORGE_CSP_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcpforge/csp/relation.hpp"
#include "pcpforge/rational.hpp"

namespace pcpforge {

struct Edge {
  std::vector<VarId> vars;  // ordered tuple, repeats allowed
  RelationPtr rel;
  Rational weight = 1;  // exact, non-negative
  uint64_t mult = 1;    // positive
};

// A weighted hypergraph CSP. Variables are dense indices 0..n-1; each refers
// to a named alphabet. Immutable by convention: transforms build new
// instances, never mutate.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<std::pair<std::string, AlphabetPtr>> alphabets,
           std::vector<int> var_alphabet, std::vector<Edge> edges,
           std::optional<std::vector<VarId>> marked = std::nullopt);

  // Convenience: n variables sharing one alphabet.
  static Instance uniform(int n, AlphabetPtr alphabet, std::vector<Edge> edges,
                          std::optional<std::vector<VarId>> marked = std::nullopt,
                          const std::string& alphabet_name = "sigma");

  int num_variables() const { return (int)var_alphabet_.size(); }
  size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(size_t i) const;

  const AlphabetPtr& alphabet_of(VarId v) const;
  int alphabet_index_of(VarId v) const { return var_alphabet_.at((size_t)v); }
  const std::vector<std::pair<std::string, AlphabetPtr>>& alphabets() const { return alphabets_; }
  const std::vector<int>& var_alphabet() const { return var_alphabet_; }

  bool has_marked() const { return marked_.has_value(); }
  const std::vector<VarId>& marked() const;

  // Total weight counted with multiplicity; zero for edgeless instances.
  Rational total_weight() const;
  bool is_unweighted() const;  // all weights equal 1

  // Per-variable degree counted with multiplicity (position count).
  std::vector<int64_t> degrees() const;
  // Degree if regular; nullopt otherwise.
  std::optional<int64_t> regular_degree() const;
  bool is_binary() const;

  // Structural equality of the underlying weighted hypergraph (everything but
  // the relations). Used as the swap-distance precondition.
  bool same_hypergraph(const Instance& other) const;

 private:
  void validate() const;

  std::vector<std::pair<std::string, AlphabetPtr>> alphabets_;
  std::vector<int> var_alphabet_;  // variable -> index into alphabets_
  std::vector<Edge> edges_;
  std::optional<std::vector<VarId>> marked_;
};

struct Assignment {
  std::vector<LabelValue> values;  // aligned with instance variable order

  bool operator==(const Assignment&) const = default;
  bool operator<(const Assignment& o) const { return values < o.values; }
};

// Checks the assignment is total and well-typed for the instance.
void check_assignment(const Instance& inst, const Assignment& a);

}  // namespace pcpforge

#endif
