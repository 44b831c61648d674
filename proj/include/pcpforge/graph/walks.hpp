#ifndef PCPFORGE_GRAPH_WALKS_HPP
#define PCPFORGE_GRAPH_WALKS_HPP

#include <vector>

#include "pcpforge/graph/graph.hpp"
#include "pcpforge/rational.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

// Walk law used throughout: each round takes one uniform step and then halts
// with probability 1/t. Lengths are geometric from 1: P[S=k] = (1/t)(1-1/t)^{k-1},
// E[S] = t and P[S > B] = (1-1/t)^B.

// Exact BSRW stopping distributions conditioned on halting within t steps:
// row v = sum_{l=1..t} w_l P^l[v,.] / sum w_l with w_l = (1/t)(1-1/t)^{l-1}.
class WalkKernel {
 public:
  WalkKernel(const Graph& g, int t, int n_cap = 512);

  int horizon() const { return t_; }
  int num_vertices() const { return n_; }
  // Dense row; entries are exact and sum to 1.
  const std::vector<Rational>& row(int v) const { return rows_[(size_t)v]; }

 private:
  int n_ = 0;
  int t_ = 1;
  std::vector<std::vector<Rational>> rows_;
};

struct WalkStep {
  int edge = 0;  // edge index in the graph
  int from = 0;
  int to = 0;
};

struct Walk {
  bool discarded = false;  // length exceeded B
  int start = 0;
  int end = 0;
  std::vector<WalkStep> steps;
};

// One ASRW sample from `start`, discarded when its length exceeds B.
Walk sample_asrw(const Graph& g, int t, int max_len, int start, RandomSource& rng);

// All surviving walks from `start` in lexicographic slot order with exact
// probabilities. Total probability = 1 - (1-1/t)^B. Fails with TooLarge when
// the walk count would exceed cap.
std::vector<std::pair<Walk, Rational>> enumerate_walks(const Graph& g, int start, int t,
                                                       int max_len,
                                                       uint64_t cap = 10'000'000);

}  // namespace pcpforge

#endif
