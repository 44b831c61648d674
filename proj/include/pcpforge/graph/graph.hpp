#ifndef PCPFORGE_GRAPH_GRAPH_HPP
#define PCPFORGE_GRAPH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pcpforge/error.hpp"

namespace pcpforge {

// Undirected multigraph; self-loops and parallel edges allowed. A self-loop
// contributes 2 to its endpoint's degree and 2 walk slots.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return (int)edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const { return (int)slots_[(size_t)v].size(); }
  bool is_regular() const;
  int regular_degree() const;  // fails with NotRegular
  int max_degree() const;
  bool is_connected() const;

  // Walk slot: one incident (edge, direction) pair per degree unit.
  struct Slot {
    int edge = 0;   // edge index
    int to = 0;     // landing vertex
  };
  const std::vector<Slot>& slots(int v) const { return slots_[(size_t)v]; }

  std::vector<int> ball(int center, int radius) const;       // sorted vertex ids
  std::vector<int> distances_from(int v) const;              // -1 if unreachable

  // Text format: header "n d" (d = 0 when irregular), then one "u v" per line.
  std::string to_text() const;
  static Graph from_text(const std::string& text);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Slot>> slots_;
};

Graph superimpose(const Graph& g, const Graph& h);  // SizeMismatch if n differs

}  // namespace pcpforge

#endif
