#include "pcpforge/recover/recover.hpp"

#include <algorithm>
#include <map>

namespace pcpforge {

AssignmentDistribution recover_degree(const CloudMap& map, const Assignment& reduced) {
  require(reduced.values.size() == map.owner.size(), Errc::DomainMismatch,
          "assignment over wrong variable set");
  std::vector<Marginal> marginals;
  marginals.reserve(map.clouds.size());
  for (const auto& cloud : map.clouds) {
    std::map<LabelValue, long> hist;
    for (VarId c : cloud) ++hist[reduced.values[(size_t)c]];
    Marginal m;
    for (auto& [lab, cnt] : hist) m.push_back({lab, rat(cnt, (long)cloud.size())});
    marginals.push_back(std::move(m));
  }
  return AssignmentDistribution::product(std::move(marginals));
}

AssignmentDistribution recover_expanderize(const Assignment& a) {
  return AssignmentDistribution::point_mass(a);
}

TruncatedOpinion truncated_opinion(const WalkKernel& kernel, const Instance& source,
                                   const Assignment& powered, VarId v) {
  uint64_t sigma = source.alphabet_of(v)->size();
  auto labels = source.alphabet_of(v)->enumerate();
  Rational cutoff = rat(1, 10 * (long)sigma);

  std::map<LabelValue, Rational> mu;
  const auto& row = kernel.row(v);
  for (int w = 0; w < kernel.num_vertices(); ++w) {
    if (row[(size_t)w] == 0) continue;
    const BallLabel& opinion = powered.values[(size_t)w].ball();
    mu[LabelValue(opinion.opinion(v))] += row[(size_t)w];
  }

  TruncatedOpinion out;
  out.denominator = 0;
  for (auto& lab : labels) {
    auto it = mu.find(lab);
    Rational p = it == mu.end() ? Rational(0) : it->second;
    if (p > 0) out.base.push_back({lab, p});
    Rational trimmed = p - cutoff;
    if (trimmed > 0) out.denominator += trimmed;
  }
  require(out.denominator >= rat(9, 10), Errc::InvalidArgument,
          "truncation denominator below 9/10");
  for (auto& [lab, p] : out.base) {
    Rational trimmed = p - cutoff;
    if (trimmed > 0) out.truncated.push_back({lab, trimmed / out.denominator});
  }
  return out;
}

AssignmentDistribution recover_power(const Instance& source, const WalkKernel& kernel,
                                     const Assignment& powered) {
  require((int)powered.values.size() == source.num_variables(), Errc::DomainMismatch,
          "powered assignment over wrong variable set");
  std::vector<Marginal> marginals;
  for (VarId v = 0; v < source.num_variables(); ++v)
    marginals.push_back(truncated_opinion(kernel, source, powered, v).truncated);
  return AssignmentDistribution::product(std::move(marginals));
}

SwissCheese swiss_cheese(const HadamardCodebook& code, uint64_t block_bits,
                         size_t num_labels) {
  SwissCheese out;
  int best = code.ell + 1;
  for (size_t i = 0; i < num_labels && i < code.codewords.size(); ++i) {
    int d = __builtin_popcountll(block_bits ^ code.codewords[i]);
    if (d < best) {
      best = d;
      out.label_index = (int)i;
    }
  }
  out.delta = rat(best, code.ell);
  out.p = 1 - 4 * out.delta;
  if (out.p < 0) out.p = 0;
  return out;
}

namespace {

uint64_t block_bits_of(const AlphabetReduceMap& map, const Assignment& reduced, VarId v) {
  uint64_t bits = 0;
  const auto& block = map.x_block[(size_t)v];
  for (size_t i = 0; i < block.size(); ++i) {
    require((size_t)block[i] < reduced.values.size(), Errc::BlockMissing, "X block variable");
    if (reduced.values[(size_t)block[i]].plain()) bits |= 1ULL << i;
  }
  return bits;
}

}  // namespace

AssignmentDistribution recover_alphabet_marginals(const AlphabetReduceMap& map,
                                                  const Assignment& reduced) {
  std::vector<Marginal> marginals;
  for (size_t v = 0; v < map.x_block.size(); ++v) {
    SwissCheese sc = swiss_cheese(map.code, block_bits_of(map, reduced, (VarId)v),
                                  map.source_labels[v].size());
    LabelValue decoded = map.source_labels[v][(size_t)sc.label_index];
    LabelValue fallback = map.source_labels[v][(size_t)map.fallback_index];
    Marginal m;
    if (decoded == fallback) {
      m.push_back({decoded, Rational(1)});
    } else {
      if (sc.p > 0) m.push_back({decoded, sc.p});
      if (sc.p < 1) m.push_back({fallback, 1 - sc.p});
    }
    marginals.push_back(std::move(m));
  }
  return AssignmentDistribution::product(std::move(marginals));
}

AssignmentDistribution recover_alphabet_joint(const AlphabetReduceMap& map,
                                              const Assignment& reduced) {
  size_t n = map.x_block.size();
  std::vector<SwissCheese> sc;
  sc.reserve(n);
  for (size_t v = 0; v < n; ++v)
    sc.push_back(swiss_cheese(map.code, block_bits_of(map, reduced, (VarId)v),
                              map.source_labels[v].size()));

  // tau regimes: sort thresholds 4*delta_v; within a regime, vertices with
  // 4 delta_v <= tau decode, the rest fall back
  std::vector<Rational> cuts = {Rational(0), Rational(1)};
  for (auto& s : sc) {
    Rational c = 4 * s.delta;
    if (c < 1) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::pair<Assignment, Rational>> atoms;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational lo = cuts[i], hi = cuts[i + 1];
    Assignment a;
    a.values.resize(n);
    for (size_t v = 0; v < n; ++v) {
      bool decode = 4 * sc[v].delta <= lo;  // tau in (lo, hi]: decode iff 4 delta <= lo
      a.values[v] = map.source_labels[v][(size_t)(decode ? sc[v].label_index
                                                         : map.fallback_index)];
    }
    atoms.push_back({std::move(a), hi - lo});
  }
  return AssignmentDistribution::empirical(std::move(atoms));
}

Assignment recover_alphabet_sample(const AlphabetReduceMap& map, const Assignment& reduced,
                                   RandomSource& rng) {
  // one shared 64-bit fixed-point threshold in [0,1)
  Rational tau(BigInt((unsigned long)rng.next_u64()), BigInt(1) << 64);
  tau.canonicalize();
  Assignment out;
  out.values.resize(map.x_block.size());
  for (size_t v = 0; v < map.x_block.size(); ++v) {
    SwissCheese sc = swiss_cheese(map.code, block_bits_of(map, reduced, (VarId)v),
                                  map.source_labels[v].size());
    bool decode = 4 * sc.delta <= tau;
    out.values[v] =
        map.source_labels[v][(size_t)(decode ? sc.label_index : map.fallback_index)];
  }
  return out;
}

Assignment recover_fglss(const FglssResult& fg, const Instance& source,
                         const std::vector<int>& clique) {
  require(is_clique(fg.graph, clique), Errc::NotAClique, "input is not a clique");
  Assignment out;
  out.values.resize((size_t)source.num_variables());
  for (int v = 0; v < source.num_variables(); ++v)
    out.values[(size_t)v] = source.alphabet_of(v)->enumerate()[0];  // fixed fallback

  std::map<VarId, Label> chosen;
  for (int gv : clique) {
    const FglssVertex& fv = fg.legend[(size_t)gv];
    const Edge& e = source.edges()[fv.edge];
    for (int i = 0; i < 2; ++i) {
      auto it = chosen.find(e.vars[(size_t)i]);
      if (it == chosen.end())
        chosen[e.vars[(size_t)i]] = fv.labels[(size_t)i];
      else
        require(it->second == fv.labels[(size_t)i], Errc::InconsistentClique,
                "clique assigns two labels to one variable");
    }
  }
  for (auto& [v, lab] : chosen) out.values[(size_t)v] = LabelValue(lab);
  return out;
}

Assignment recover_e3sat(const E3SatMap& map, const Instance& source,
                         const Assignment& sat_assignment) {
  Assignment out;
  out.values.resize((size_t)source.num_variables());
  for (int v = 0; v < source.num_variables(); ++v) {
    auto [base, bits] = map.block[(size_t)v];
    int idx = 0;
    for (int i = 0; i < bits; ++i)
      if (sat_assignment.values[(size_t)(base + i)].plain()) idx |= 1 << i;
    const auto& labels = map.source_labels[(size_t)v];
    out.values[(size_t)v] = idx < (int)labels.size() ? labels[(size_t)idx] : labels[0];
  }
  return out;
}

Assignment recover_3lin(const Assignment& a) { return a; }
Assignment recover_serial(const Assignment& a) { return a; }

}  // namespace pcpforge
