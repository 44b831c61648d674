#include "pcpforge/oracle/emd.hpp"

#include <algorithm>
#include <limits>

#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

TransportPlan emd_exact(const AssignmentDistribution& d1, const AssignmentDistribution& d2,
                        size_t support_cap) {
  require(d1.num_variables() == d2.num_variables(), Errc::DomainMismatch,
          "EMD over different variable sets");
  TransportPlan plan;
  plan.left = d1.to_atoms(support_cap);
  plan.right = d2.to_atoms(support_cap);
  size_t m = plan.left.size(), n = plan.right.size();

  // integer supplies over a common denominator
  BigInt den = 1;
  for (auto& [a, p] : plan.left) den = den * p.get_den() / gcd(den, p.get_den());
  for (auto& [a, p] : plan.right) den = den * p.get_den() / gcd(den, p.get_den());
  std::vector<BigInt> supply(m), demand(n);
  for (size_t i = 0; i < m; ++i)
    supply[i] = plan.left[i].second.get_num() * (den / plan.left[i].second.get_den());
  for (size_t j = 0; j < n; ++j)
    demand[j] = plan.right[j].second.get_num() * (den / plan.right[j].second.get_den());

  std::vector<std::vector<int64_t>> c(m, std::vector<int64_t>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j)
      c[i][j] = hamming(plan.left[i].first, plan.right[j].first);

  std::vector<std::vector<BigInt>> flow(m, std::vector<BigInt>(n, 0));
  std::vector<int64_t> pot(m + n, 0);  // node potentials, sources then sinks
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

  while (true) {
    size_t src = m;
    for (size_t i = 0; i < m; ++i)
      if (supply[i] > 0) {
        src = i;
        break;
      }
    if (src == m) break;

    // Dijkstra over the residual bipartite graph with reduced costs.
    size_t nn = m + n;
    std::vector<int64_t> dist(nn, kInf);
    std::vector<int> prev(nn, -1);
    std::vector<bool> done(nn, false);
    for (size_t i = 0; i < m; ++i)
      if (supply[i] > 0) dist[i] = 0;
    for (size_t it = 0; it < nn; ++it) {
      size_t u = nn;
      for (size_t k = 0; k < nn; ++k)
        if (!done[k] && dist[k] < kInf && (u == nn || dist[k] < dist[u])) u = k;
      if (u == nn) break;
      done[u] = true;
      if (u < m) {
        for (size_t j = 0; j < n; ++j) {
          int64_t rc = c[u][j] + pot[u] - pot[m + j];
          if (dist[u] + rc < dist[m + j]) {
            dist[m + j] = dist[u] + rc;
            prev[m + j] = (int)u;
          }
        }
      } else {
        size_t j = u - m;
        for (size_t i = 0; i < m; ++i) {
          if (flow[i][j] == 0) continue;
          int64_t rc = -c[i][j] + pot[m + j] - pot[i];
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            prev[i] = (int)u;
          }
        }
      }
    }
    size_t sink = nn;
    for (size_t j = 0; j < n; ++j)
      if (demand[j] > 0 && dist[m + j] < kInf && (sink == nn || dist[m + j] < dist[sink]))
        sink = m + j;
    require(sink != nn, Errc::InvalidArgument, "transportation: no augmenting path");

    // bottleneck along the path: demand at the sink, supply at the path head,
    // and every reverse arc's flow in between
    BigInt push = demand[sink - m];
    {
      size_t u = sink;
      while (prev[u] != -1) {
        size_t p = (size_t)prev[u];
        if (u < m) push = std::min(push, flow[u][p - m]);  // reverse arc sink(p) -> source(u)
        u = p;
      }
      push = std::min(push, supply[u]);
    }
    require(push > 0, Errc::InvalidArgument, "transportation: zero augmentation");
    {
      size_t u = sink;
      while (prev[u] != -1) {
        size_t p = (size_t)prev[u];
        if (u >= m)
          flow[p][u - m] += push;  // forward arc source(p) -> sink(u)
        else
          flow[u][p - m] -= push;  // reverse arc
        u = p;
      }
      supply[u] -= push;
    }
    demand[sink - m] -= push;
    for (size_t k = 0; k < nn; ++k)
      if (dist[k] < kInf) pot[k] += dist[k];
  }

  BigInt total_cost = 0;
  plan.flow.assign(m, std::vector<Rational>(n, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (flow[i][j] == 0) continue;
      total_cost += flow[i][j] * c[i][j];
      Rational f(flow[i][j], den);
      f.canonicalize();
      plan.flow[i][j] = f;
    }
  plan.cost = Rational(total_cost, den);
  plan.cost.canonicalize();

  // marginal audit
  for (size_t i = 0; i < m; ++i) {
    Rational row = 0;
    for (size_t j = 0; j < n; ++j) row += plan.flow[i][j];
    require(row == plan.left[i].second, Errc::InvalidArgument, "plan row sum mismatch");
  }
  for (size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (size_t i = 0; i < m; ++i) col += plan.flow[i][j];
    require(col == plan.right[j].second, Errc::InvalidArgument, "plan column sum mismatch");
  }
  return plan;
}

Rational emd_upper_product(const AssignmentDistribution& d1, const AssignmentDistribution& d2) {
  require(d1.num_variables() == d2.num_variables(), Errc::DomainMismatch,
          "EMD bound over different variable sets");
  Rational sum = 0;
  for (int v = 0; v < d1.num_variables(); ++v)
    sum += total_variation(d1.marginal(v), d2.marginal(v));
  return sum;
}

}  // namespace pcpforge
