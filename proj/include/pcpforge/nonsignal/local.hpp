#ifndef PCPFORGE_NONSIGNAL_LOCAL_HPP
#define PCPFORGE_NONSIGNAL_LOCAL_HPP

#include <functional>
#include <string>

#include "pcpforge/graph/graph.hpp"
#include "pcpforge/rational.hpp"

namespace pcpforge {

// The radius-t view a local rule is allowed to see: the induced sub-multigraph
// on ball(center, t), with original vertex ids.
struct BallView {
  int center = 0;
  int radius = 0;
  std::vector<int> vertices;                  // sorted original ids; includes center
  std::vector<std::pair<int, int>> edges;     // original ids, both endpoints in ball
};

BallView extract_ball(const Graph& g, int center, int radius);

// Output rule of a locality-t algorithm: a function of the extracted ball and
// the shared randomness seed only. Enforced by construction.
struct LocalAlgorithm {
  std::string name;
  int locality = 0;
  std::function<int(const BallView&, uint64_t seed)> rule;
};

std::vector<int> run_local(const LocalAlgorithm& alg, const Graph& g, uint64_t seed);

struct NonsignalEdgeCheck {
  size_t edge = 0;
  int64_t affected = 0;        // |{v : e inside ball(v, t)}|
  int64_t bound = 0;           // 2 Delta^t
  Rational coupling_emd;       // shared-seed average Hamming, over `samples` runs
  bool affected_ok = false;    // affected <= bound
  bool coupling_ok = false;    // coupling_emd <= affected
};

struct NonsignalReport {
  int locality = 0;
  int max_degree = 0;
  uint64_t samples = 0;
  std::vector<NonsignalEdgeCheck> edges;
  bool passed = false;
};

// For each edge: exact affected set (vertices whose radius-t view contains the
// edge), the 2 Delta^t bound, and the shared-seed coupling EMD of the rule on
// G vs G - e.
NonsignalReport check_nonsignaling_sensitivity(const LocalAlgorithm& alg, const Graph& g,
                                               uint64_t samples, uint64_t seed);

}  // namespace pcpforge

#endif
