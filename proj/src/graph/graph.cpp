#include "pcpforge/graph/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace pcpforge {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)) {
  require(n >= 0, Errc::InvalidArgument, "negative vertex count");
  slots_.assign((size_t)n, {});
  for (int i = 0; i < (int)edges_.size(); ++i) {
    auto [u, v] = edges_[(size_t)i];
    require(u >= 0 && u < n && v >= 0 && v < n, Errc::UnknownVariable,
            "edge endpoint out of range");
    slots_[(size_t)u].push_back({i, v});
    slots_[(size_t)v].push_back({i, u});
  }
}

bool Graph::is_regular() const {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return n_ > 0;
}

int Graph::regular_degree() const {
  require(is_regular(), Errc::NotRegular, "graph is not regular");
  return degree(0);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> Graph::distances_from(int v) const {
  require(v >= 0 && v < n_, Errc::UnknownVariable, "vertex out of range");
  std::vector<int> dist((size_t)n_, -1);
  std::queue<int> q;
  dist[(size_t)v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (const Slot& s : slots_[(size_t)u])
      if (dist[(size_t)s.to] < 0) {
        dist[(size_t)s.to] = dist[(size_t)u] + 1;
        q.push(s.to);
      }
  }
  return dist;
}

std::vector<int> Graph::ball(int center, int radius) const {
  auto dist = distances_from(center);
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (dist[(size_t)v] >= 0 && dist[(size_t)v] <= radius) out.push_back(v);
  return out;
}

std::string Graph::to_text() const {
  std::ostringstream ss;
  ss << n_ << " " << (is_regular() ? degree(0) : 0) << "\n";
  for (auto [u, v] : edges_) ss << u << " " << v << "\n";
  return ss.str();
}

Graph Graph::from_text(const std::string& text) {
  std::istringstream ss(text);
  int n = -1, d = 0;
  require(bool(ss >> n >> d), Errc::ParseError, "graph header");
  std::vector<std::pair<int, int>> edges;
  int u, v;
  while (ss >> u >> v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph superimpose(const Graph& g, const Graph& h) {
  require(g.num_vertices() == h.num_vertices(), Errc::SizeMismatch,
          "superimpose needs equal vertex counts");
  std::vector<std::pair<int, int>> edges = g.edges();
  edges.insert(edges.end(), h.edges().begin(), h.edges().end());
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace pcpforge
