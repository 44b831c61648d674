#include "pcpforge/graph/walks.hpp"

namespace pcpforge {

WalkKernel::WalkKernel(const Graph& g, int t, int n_cap) : n_(g.num_vertices()), t_(t) {
  require(t >= 1, Errc::InvalidArgument, "walk horizon must be >= 1");
  require(n_ <= n_cap, Errc::TooLarge, "kernel vertex count over cap");
  int d = g.regular_degree();
  require(d >= 1, Errc::NotRegular, "kernel needs positive degree");

  // P[v][w] = (slots from v to w) / d
  std::vector<std::vector<Rational>> p((size_t)n_, std::vector<Rational>((size_t)n_, 0));
  for (int v = 0; v < n_; ++v)
    for (const Graph::Slot& s : g.slots(v)) p[(size_t)v][(size_t)s.to] += rat(1, d);

  std::vector<std::vector<Rational>> power = p;
  rows_.assign((size_t)n_, std::vector<Rational>((size_t)n_, 0));
  Rational norm = 0;
  Rational w = rat(1, t);  // w_1
  for (int len = 1; len <= t; ++len) {
    for (int v = 0; v < n_; ++v)
      for (int u = 0; u < n_; ++u) rows_[(size_t)v][(size_t)u] += w * power[(size_t)v][(size_t)u];
    norm += w;
    if (len == t) break;
    w *= rat(t - 1, t);
    // power <- power * p
    std::vector<std::vector<Rational>> next((size_t)n_, std::vector<Rational>((size_t)n_, 0));
    for (int v = 0; v < n_; ++v)
      for (int k = 0; k < n_; ++k) {
        if (power[(size_t)v][(size_t)k] == 0) continue;
        for (int u = 0; u < n_; ++u)
          next[(size_t)v][(size_t)u] += power[(size_t)v][(size_t)k] * p[(size_t)k][(size_t)u];
      }
    power = std::move(next);
  }
  for (auto& row : rows_) {
    Rational sum = 0;
    for (auto& x : row) {
      x /= norm;
      sum += x;
    }
    require(sum == 1, Errc::InvalidArgument, "kernel row does not sum to 1");
  }
}

Walk sample_asrw(const Graph& g, int t, int max_len, int start, RandomSource& rng) {
  require(t >= 1, Errc::InvalidArgument, "walk horizon must be >= 1");
  int d = g.regular_degree();
  Walk w;
  w.start = start;
  int cur = start;
  while (true) {
    const Graph::Slot& s = g.slots(cur)[(size_t)rng.uniform((uint64_t)d)];
    w.steps.push_back({s.edge, cur, s.to});
    cur = s.to;
    if ((int64_t)w.steps.size() > max_len) {
      w.discarded = true;
      w.end = cur;
      return w;
    }
    if (t == 1 || rng.bernoulli(1, (uint64_t)t)) break;
  }
  w.end = cur;
  return w;
}

std::vector<std::pair<Walk, Rational>> enumerate_walks(const Graph& g, int start, int t,
                                                       int max_len, uint64_t cap) {
  require(t >= 1 && max_len >= 0, Errc::InvalidArgument, "enumerate_walks parameters");
  int d = g.regular_degree();
  // total walk count: sum_{l=1..B} d^l
  uint64_t total = 0, dl = 1;
  for (int l = 1; l <= max_len; ++l) {
    if (dl > cap / (uint64_t)d) fail(Errc::TooLarge, "walk enumeration over cap");
    dl *= (uint64_t)d;
    total += dl;
    require(total <= cap, Errc::TooLarge, "walk enumeration over cap");
  }
  std::vector<std::pair<Walk, Rational>> out;
  out.reserve(total);
  Rational halt = rat(1, t);
  Rational cont = rat(t - 1, t);
  Rational step = rat(1, d);

  // depth-first in lexicographic slot order
  struct Frame {
    int vertex;
    int slot;
  };
  std::vector<Frame> stack;
  Walk cur;
  cur.start = start;
  Rational move_prob = 1;  // product of per-step (1/d)
  std::function<void(int, int, Rational)> rec = [&](int v, int depth, Rational prefix) {
    if (depth >= 1) {
      Walk w = cur;
      w.end = v;
      Rational halt_coeff = halt;
      for (int i = 1; i < depth; ++i) halt_coeff *= cont;
      // prob = (1/t)(1-1/t)^{depth-1} * prod(1/d)
      out.push_back({std::move(w), halt_coeff * prefix});
    }
    if (depth == max_len) return;
    for (const Graph::Slot& s : g.slots(v)) {
      cur.steps.push_back({s.edge, v, s.to});
      rec(s.to, depth + 1, prefix * step);
      cur.steps.pop_back();
    }
  };
  rec(start, 0, Rational(1));
  return out;
}

}  // namespace pcpforge
