#include "pcpforge/oracle/diagnostics.hpp"

#include <cmath>

#include "pcpforge/csp/ops.hpp"
#include "pcpforge/graph/walks.hpp"
#include "pcpforge/rng.hpp"
#include "pcpforge/transform/expanderize.hpp"

namespace pcpforge {

PoweringDiagnostics powering_diagnostics(const Instance& inst, const Assignment& sigma, int t,
                                         int max_len, uint64_t samples, uint64_t seed) {
  require(samples > 0, Errc::InvalidArgument, "diagnostics need samples");
  Graph g = constraint_graph(inst);
  int n = g.num_vertices();
  require(g.is_regular() && g.is_connected(), Errc::NotRegular,
          "diagnostics need a regular connected instance");
  check_assignment(inst, sigma);

  // violated edge slots, in constraint_graph slot order
  std::vector<bool> faulty;
  for (const auto& e : inst.edges()) {
    bool violated = !edge_satisfied(inst, e, sigma);
    for (uint64_t k = 0; k < e.mult; ++k) faulty.push_back(violated);
  }
  size_t f_count = 0;
  for (bool b : faulty) f_count += b;

  std::vector<std::vector<int>> dist;
  for (int v = 0; v < n; ++v) dist.push_back(g.distances_from(v));

  PoweringDiagnostics out;
  out.samples = samples;
  out.t = t;
  out.max_len = max_len;
  out.faulty_edges = f_count;

  double sum_len = 0, sum_len2 = 0;
  double sum_gt = 0;
  double sum_n = 0;
  double sum_ns = 0, sum_ns2 = 0, sum_ns4 = 0;
  double sum_pos = 0;

  RandomSource rng(seed);
  int d = g.regular_degree();
  for (uint64_t i = 0; i < samples; ++i) {
    int start = (int)rng.uniform((uint64_t)n);
    // raw ASRW, no truncation: step then halt with probability 1/t
    std::vector<WalkStep> steps;
    int cur = start;
    while (true) {
      const Graph::Slot& s = g.slots(cur)[(size_t)rng.uniform((uint64_t)d)];
      steps.push_back({s.edge, cur, s.to});
      cur = s.to;
      if (t == 1 || rng.bernoulli(1, (uint64_t)t)) break;
    }
    int endv = cur;
    int64_t len = (int64_t)steps.size();
    int64_t nf = 0;
    for (const WalkStep& st : steps) {
      if (!faulty[(size_t)st.edge]) continue;
      if (dist[(size_t)start][(size_t)st.from] > t) continue;
      if (dist[(size_t)endv][(size_t)st.to] > t) continue;
      ++nf;
    }
    int64_t ns = len <= max_len ? nf : 0;
    sum_len += (double)len;
    sum_len2 += (double)len * (double)len;
    sum_gt += len > max_len ? 1 : 0;
    sum_n += (double)nf;
    sum_ns += (double)ns;
    sum_ns2 += (double)ns * (double)ns;
    sum_ns4 += (double)ns * (double)ns * (double)ns * (double)ns;
    sum_pos += ns > 0 ? 1 : 0;
  }

  double N = (double)samples;
  auto se_of = [&](double sum, double sum_sq) {
    double mean = sum / N;
    double var = std::max(0.0, sum_sq / N - mean * mean);
    return std::sqrt(var / N);
  };
  out.mean_len = sum_len / N;
  out.se_len = se_of(sum_len, sum_len2);
  out.pr_len_gt_b = sum_gt / N;
  out.se_len_gt_b = se_of(sum_gt, sum_gt);
  out.mean_n = sum_n / N;
  out.mean_nstar = sum_ns / N;
  out.se_nstar = se_of(sum_ns, sum_ns2);
  out.mean_nstar_sq = sum_ns2 / N;
  out.se_nstar_sq = se_of(sum_ns2, sum_ns4);
  out.pr_nstar_pos = sum_pos / N;
  out.se_nstar_pos = se_of(sum_pos, sum_pos);

  out.second_moment_rhs =
      out.mean_nstar_sq > 0 ? out.mean_nstar * out.mean_nstar / out.mean_nstar_sq : 0;
  double slack = 3 * (out.se_nstar_pos + 2 * out.se_nstar + out.se_nstar_sq);
  out.second_moment_ok = out.pr_nstar_pos + slack >= out.second_moment_rhs;

  if (f_count > 0) {
    double sigma_sz = (double)inst.alphabet_of(0)->size();
    double m = (double)g.num_edges();
    out.faulty_lower_bound_ratio =
        out.mean_nstar * 1600.0 * sigma_sz * sigma_sz * m / ((double)t * (double)f_count);
  }
  return out;
}

}  // namespace pcpforge
