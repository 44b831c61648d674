#include "pcpforge/transform/power.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "pcpforge/graph/walks.hpp"
#include "pcpforge/rng.hpp"
#include "pcpforge/transform/expanderize.hpp"

namespace pcpforge {

int powering_max_len(int t, uint64_t alphabet_size) {
  require(t >= 1 && alphabet_size >= 2, Errc::InvalidArgument, "powering parameters");
  int log2_sigma = 0;
  uint64_t p = 1;
  while (p < alphabet_size) {
    p *= 2;
    ++log2_sigma;
  }
  return 10 * t * std::max(log2_sigma, 1);
}

namespace {

struct PowerContext {
  const Instance* src = nullptr;
  Graph g;
  int t = 1, B = 0, d = 0, n = 0;
  std::vector<std::vector<int>> dist;  // all-pairs BFS distances
};

PowerContext make_context(const Instance& inst, int t, const PowerOptions& opts) {
  PowerContext ctx;
  ctx.src = &inst;
  require(inst.is_unweighted(), Errc::InvalidArgument,
          "powering expects an unweighted instance (materialize first)");
  ctx.g = constraint_graph(inst);
  require(ctx.g.is_regular(), Errc::NotRegular, "powering needs a regular instance");
  require(ctx.g.is_connected(), Errc::NotConnected, "powering needs a connected instance");
  for (int v = 1; v < inst.num_variables(); ++v)
    require(inst.alphabet_of(v)->fingerprint() == inst.alphabet_of(0)->fingerprint(),
            Errc::InvalidArgument, "powering needs a uniform alphabet");
  ctx.t = t;
  ctx.d = ctx.g.regular_degree();
  ctx.n = ctx.g.num_vertices();
  ctx.B = opts.max_len ? *opts.max_len : powering_max_len(t, inst.alphabet_of(0)->size());
  for (int v = 0; v < ctx.n; ++v) ctx.dist.push_back(ctx.g.distances_from(v));
  return ctx;
}

// The i-th constraint instance maps to directed step ids 2i (forward) and
// 2i+1 (reverse); a self-loop uses only 2i.
int step_id(const Graph& g, int edge, int from) {
  auto [u, v] = g.edges()[(size_t)edge];
  if (u == v) return 2 * edge;
  return from == u ? 2 * edge : 2 * edge + 1;
}

std::pair<int, int> step_ends(const Graph& g, int id) {
  auto [u, v] = g.edges()[(size_t)(id / 2)];
  if (u == v) return {u, v};
  return id % 2 == 0 ? std::pair{u, v} : std::pair{v, u};
}

// Relation (and source relation index) for a step's underlying constraint:
// multiplicity was expanded in constraint_graph in edge-list order.
std::vector<RelationPtr> slot_relations(const Instance& inst) {
  std::vector<RelationPtr> out;
  for (const auto& e : inst.edges())
    for (uint64_t k = 0; k < e.mult; ++k) out.push_back(e.rel);
  return out;
}

RelationPtr walk_relation(const PowerContext& ctx, const std::vector<RelationPtr>& rel_of_edge,
                          int v, int w, uint64_t mask) {
  std::vector<Relation::WalkCheck> checks;
  for (int id = 0; id < 2 * ctx.g.num_edges(); ++id) {
    if (!(mask >> id & 1)) continue;
    auto [a, b] = step_ends(ctx.g, id);
    if (ctx.dist[(size_t)v][(size_t)a] > ctx.t) continue;
    if (ctx.dist[(size_t)w][(size_t)b] > ctx.t) continue;
    checks.push_back({(VarId)a, (VarId)b, rel_of_edge[(size_t)(id / 2)]});
  }
  return Relation::walk(std::move(checks));
}

Instance assemble(const PowerContext& ctx,
                  std::vector<Edge> edges) {
  const Instance& inst = *ctx.src;
  std::vector<std::pair<std::string, AlphabetPtr>> alphabets;
  AlphabetPtr base = inst.alphabet_of(0);
  alphabets.push_back({"base", base});
  std::vector<int> var_alph((size_t)ctx.n);
  for (int v = 0; v < ctx.n; ++v) {
    std::vector<VarId> dom;
    for (int u = 0; u < ctx.n; ++u)
      if (ctx.dist[(size_t)v][(size_t)u] >= 0 && ctx.dist[(size_t)v][(size_t)u] <= ctx.t)
        dom.push_back((VarId)u);
    alphabets.push_back({"ball_v" + std::to_string(v), Alphabet::ball(std::move(dom), base)});
    var_alph[(size_t)v] = v + 1;
  }
  return Instance(std::move(alphabets), std::move(var_alph), std::move(edges));
}

}  // namespace

PowerResult power(const Instance& inst, int t, const PowerOptions& opts) {
  PowerContext ctx = make_context(inst, t, opts);
  auto rel_of_edge = slot_relations(inst);

  PowerResult out;
  out.t = t;
  out.max_len = ctx.B;
  out.truncation_tail = geometric_tail(t, ctx.B);
  out.graph = ctx.g;

  std::vector<Edge> edges;
  if (opts.mode == PowerOptions::Mode::Exact) {
    require(2 * ctx.g.num_edges() <= 64, Errc::TooLarge,
            "exact powering tracks at most 64 directed steps; use Sampled mode");
    // common denominator t^B d^B n; per-level numerator count*(t-1)^{l-1}*(td)^{B-l}
    BigInt den = BigInt(ctx.n);
    BigInt td = BigInt((long)ctx.t) * ctx.d;
    for (int l = 0; l < ctx.B; ++l) den *= td;
    std::vector<BigInt> level_factor((size_t)ctx.B + 1);
    {
      BigInt tail = 1;  // (td)^{B-l}
      for (int l = ctx.B; l >= 1; --l) {
        BigInt cont = 1;  // (t-1)^{l-1}
        for (int i = 1; i < l; ++i) cont *= (ctx.t - 1);
        level_factor[(size_t)l] = cont * tail;
        tail *= td;
      }
    }

    struct KeyHash {
      size_t operator()(const std::pair<uint64_t, int>& k) const {
        return std::hash<uint64_t>()(k.first * 0x9e3779b97f4a7c15ULL + (uint64_t)k.second);
      }
    };
    // group accumulator: (end vertex, filtered mask) -> scaled numerator
    for (int v = 0; v < ctx.n; ++v) {
      std::unordered_map<std::pair<uint64_t, int>, BigInt, KeyHash> acc;
      std::unordered_map<std::pair<uint64_t, int>, uint64_t, KeyHash> level, next;
      level[{0, v}] = 1;
      for (int l = 1; l <= ctx.B; ++l) {
        next.clear();
        for (const auto& [key, cnt] : level) {
          auto [mask, u] = key;
          for (const Graph::Slot& s : ctx.g.slots(u)) {
            uint64_t m2 = mask;
            if (ctx.dist[(size_t)v][(size_t)u] <= ctx.t)
              m2 |= 1ULL << step_id(ctx.g, s.edge, u);
            next[{m2, s.to}] += cnt;
          }
          require(next.size() <= opts.state_cap, Errc::TooLarge,
                  "exact powering state cap exceeded; use Sampled mode");
        }
        level.swap(next);
        // every state is a possible stop: filter the mask on the landing side
        for (const auto& [key, cnt] : level) {
          auto [mask, w] = key;
          uint64_t filtered = 0;
          for (int id = 0; id < 2 * ctx.g.num_edges(); ++id) {
            if (!(mask >> id & 1)) continue;
            auto [a, b] = step_ends(ctx.g, id);
            if (ctx.dist[(size_t)w][(size_t)b] <= ctx.t &&
                ctx.dist[(size_t)v][(size_t)a] <= ctx.t)
              filtered |= 1ULL << id;
          }
          acc[{filtered, w}] += BigInt((unsigned long)cnt) * level_factor[(size_t)l];
        }
        if (ctx.t == 1) break;  // halting is certain after the first step
      }
      // deterministic edge order per start vertex
      std::map<std::pair<int, uint64_t>, BigInt> ordered;
      for (auto& [key, num] : acc) ordered[{key.second, key.first}] = num;
      for (auto& [key, num] : ordered) {
        auto [w, mask] = key;
        Edge e;
        e.vars = {(VarId)v, (VarId)w};
        e.rel = walk_relation(ctx, rel_of_edge, v, w, mask);
        e.weight = Rational(num, den);
        e.weight.canonicalize();
        edges.push_back(std::move(e));
      }
    }
  } else {
    require(opts.sample_count > 0, Errc::InvalidArgument, "sampled powering needs a budget");
    RandomSource rng(opts.seed);
    std::map<std::pair<std::pair<int, int>, std::string>, std::pair<Edge, uint64_t>> groups;
    uint64_t kept = 0;
    while (kept < opts.sample_count) {
      int v = (int)rng.uniform((uint64_t)ctx.n);
      Walk w = sample_asrw(ctx.g, ctx.t, ctx.B, v, rng);
      if (w.discarded) continue;
      ++kept;
      uint64_t mask = 0;
      for (const WalkStep& st : w.steps)
        if (ctx.dist[(size_t)v][(size_t)st.from] <= ctx.t &&
            ctx.dist[(size_t)w.end][(size_t)st.to] <= ctx.t)
          mask |= 1ULL << step_id(ctx.g, st.edge, st.from);
      Edge e;
      e.vars = {(VarId)v, (VarId)w.end};
      e.rel = walk_relation(ctx, rel_of_edge, v, w.end, mask);
      auto key = std::make_pair(std::make_pair(v, w.end), e.rel->fingerprint());
      auto it = groups.find(key);
      if (it == groups.end())
        groups.emplace(std::move(key), std::make_pair(std::move(e), (uint64_t)1));
      else
        ++it->second.second;
    }
    for (auto& [key, ge] : groups) {
      ge.first.mult = ge.second;
      edges.push_back(std::move(ge.first));
    }
  }

  out.instance = assemble(ctx, std::move(edges));
  out.total_weight = out.instance.total_weight();
  if (opts.mode == PowerOptions::Mode::Exact)
    require(out.total_weight == 1 - out.truncation_tail, Errc::InvalidArgument,
            "exact powering lost probability mass");
  return out;
}

Assignment power_lift(const PowerResult& pw, const Assignment& sigma) {
  const Instance& out = pw.instance;
  Assignment lifted;
  lifted.values.resize((size_t)out.num_variables());
  for (int v = 0; v < out.num_variables(); ++v) {
    const AlphabetPtr& alph = out.alphabet_of(v);
    require(alph->kind() == Alphabet::Kind::Ball, Errc::DomainMismatch, "not a powered variable");
    BallLabel b;
    for (VarId w : alph->ball_domain()) b.set(w, sigma.values[(size_t)w].plain());
    lifted.values[(size_t)v] = LabelValue(std::move(b));
  }
  return lifted;
}

Instance materialize(const Instance& inst, uint64_t cap) {
  BigInt den = 1;
  for (const auto& e : inst.edges()) {
    const BigInt& d = e.weight.get_den();
    den = den * d / gcd(den, d);
  }
  std::vector<Edge> edges;
  BigInt total = 0;
  for (const auto& e : inst.edges()) {
    BigInt copies = e.weight.get_num() * (den / e.weight.get_den()) * (long)e.mult;
    if (copies == 0) continue;
    total += copies;
    require(total <= (long)cap, Errc::TooLarge, "materialization over cap");
    Edge out = e;
    out.weight = 1;
    out.mult = copies.get_ui();
    edges.push_back(std::move(out));
  }
  return Instance(inst.alphabets(), inst.var_alphabet(), std::move(edges),
                  inst.has_marked() ? std::optional(inst.marked()) : std::nullopt);
}

}  // namespace pcpforge
