#include "pcpforge/transform/tester.hpp"

#include <algorithm>
#include <set>

#include "pcpforge/csp/ops.hpp"
#include "pcpforge/rng.hpp"

namespace pcpforge {

namespace {

CellKey key_bits(uint64_t bits, int nbits) {
  CellKey k(zero_bits((uint64_t)nbits));
  k[0] = bits;
  return k;
}

CellKey key_xor(const CellKey& a, const CellKey& b) {
  CellKey out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

CellKey random_key(int nbits, RandomSource& rng) {
  CellKey k(zero_bits((uint64_t)nbits));
  for (auto& w : k) w = rng.next_u64();
  int rem = nbits & 63;
  if (rem) k.back() &= (1ULL << rem) - 1;
  return k;
}

// x (x) y for x, y in {0,1}^k, as a k^2-bit key with index i*k+j.
CellKey tensor_key(uint64_t x, uint64_t y, int k) {
  CellKey out(zero_bits((uint64_t)k * (uint64_t)k));
  for (int i = 0; i < k; ++i) {
    if (!(x >> i & 1)) continue;
    for (int j = 0; j < k; ++j)
      if (y >> j & 1) flip_bit(out, (uint64_t)i * (uint64_t)k + (uint64_t)j);
  }
  return out;
}

RelationPtr parity_rel(int arity, int target) {
  std::vector<std::vector<Label>> acc;
  for (int m = 0; m < (1 << arity); ++m) {
    if (__builtin_popcount((unsigned)m) % 2 != target) continue;
    std::vector<Label> t((size_t)arity);
    for (int i = 0; i < arity; ++i) t[(size_t)i] = m >> i & 1;
    acc.push_back(std::move(t));
  }
  return Relation::tuples(arity, std::move(acc));
}

RelationPtr tensor_rel() {
  std::vector<std::vector<Label>> acc;
  for (int m = 0; m < 64; ++m) {
    int a = m & 1, b = m >> 1 & 1, c = m >> 2 & 1, d = m >> 3 & 1, e = m >> 4 & 1, f = m >> 5 & 1;
    if (((a ^ b) & (c ^ d)) == (e ^ f)) acc.push_back({a, b, c, d, e, f});
  }
  return Relation::tuples(6, std::move(acc));
}

struct Builder {
  const Circuit* circuit = nullptr;
  TesterOptions opts;
  TesterLayout layout;
  std::vector<Edge> edges;
  std::vector<QuadPoly> polys;
  VarId next_var = 0;

  VarId touch_l(const CellKey& s) {
    if (layout.l_dense) return layout.l_begin + (VarId)s[0];
    auto [it, fresh] = layout.l_cells.try_emplace(s, next_var);
    if (fresh) ++next_var;
    return it->second;
  }
  VarId touch_q(const CellKey& t) {
    if (layout.q_dense) return layout.q_begin + (VarId)t[0];
    auto [it, fresh] = layout.q_cells.try_emplace(t, next_var);
    if (fresh) ++next_var;
    return it->second;
  }
};

// (s0, s, t) = sum_{P in polys} r_P * P.
struct Combo {
  int s0 = 0;
  uint64_t s = 0;  // k <= 64
  CellKey t;
};

Combo combine(const std::vector<QuadPoly>& polys, uint64_t r, int k) {
  Combo c;
  c.t = zero_bits((uint64_t)k * (uint64_t)k);
  for (size_t p = 0; p < polys.size(); ++p) {
    if (!(r >> p & 1)) continue;
    c.s0 ^= polys[p].c0;
    c.s ^= polys[p].lin[0];
    for (size_t w = 0; w < c.t.size(); ++w) c.t[w] ^= polys[p].quad[w];
  }
  return c;
}

}  // namespace

VarId TesterLayout::l_var(const CellKey& s) const {
  if (l_dense) return l_begin + (VarId)s[0];
  auto it = l_cells.find(s);
  require(it != l_cells.end(), Errc::BlockMissing, "untouched L cell");
  return it->second;
}

VarId TesterLayout::q_var(const CellKey& t) const {
  if (q_dense) return q_begin + (VarId)t[0];
  auto it = q_cells.find(t);
  require(it != q_cells.end(), Errc::BlockMissing, "untouched Q cell");
  return it->second;
}

TesterResult assignment_tester(const Circuit& circuit, const TesterOptions& opts) {
  Builder b;
  b.circuit = &circuit;
  b.opts = opts;
  TesterLayout& lay = b.layout;
  lay.num_x = circuit.num_inputs();
  lay.num_gates = circuit.num_gates();
  lay.k = lay.num_x + lay.num_gates;
  int k = lay.k;
  require(k <= opts.hard_k_cap, Errc::TesterTooLarge,
          "tester k = " + std::to_string(k) + " above hard cap");
  b.polys = arithmetize(circuit);

  lay.x_begin = 0;
  lay.y_begin = (VarId)lay.num_x;
  b.next_var = (VarId)k;
  if (k < 63 && (1ULL << k) <= opts.dense_table_cap) {
    lay.l_dense = true;
    lay.l_begin = b.next_var;
    b.next_var += (VarId)(1ULL << k);
  }
  uint64_t k2 = (uint64_t)k * (uint64_t)k;
  if (k2 < 63 && (1ULL << k2) <= opts.dense_table_cap) {
    lay.q_dense = true;
    lay.q_begin = b.next_var;
    b.next_var += (VarId)(1ULL << k2);
  }

  // weights w1..w5 (exact rationals; denominators may be huge powers of two)
  auto pow2 = [](uint64_t e) {
    BigInt x = 1;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), e);
    return x;
  };
  lay.weights[0] = Rational(1, pow2(2 * (uint64_t)k));
  lay.weights[1] = Rational(1, pow2(2 * k2));
  lay.weights[2] = Rational(1, pow2(4 * (uint64_t)k + k2));
  lay.weights[3] = Rational(1, pow2((uint64_t)circuit.num_gates() + (uint64_t)k + k2));
  lay.weights[4] = Rational(1, pow2((uint64_t)k) * lay.num_x);
  for (auto& w : lay.weights) w.canonicalize();
  lay.normalizer = 1;
  for (auto& w : lay.weights) {
    const BigInt& den = w.get_den();
    lay.normalizer = lay.normalizer * den / gcd(lay.normalizer, den);
  }

  RelationPtr par3 = parity_rel(3, 0);
  RelationPtr par4[2] = {parity_rel(4, 0), parity_rel(4, 1)};
  RelationPtr tensor6 = tensor_rel();

  bool exact_23 = k <= opts.exact_k_cap;

  // (1) BLR on L
  {
    size_t begin = b.edges.size();
    uint64_t space = k <= 31 ? 1ULL << (2 * k) : UINT64_MAX;
    bool exact = space <= opts.family_exact_cap;
    lay.family_sampled[0] = !exact;
    if (exact) {
      for (uint64_t x = 0; x < (1ULL << k); ++x)
        for (uint64_t y = 0; y < (1ULL << k); ++y) {
          Edge e;
          e.vars = {b.touch_l(key_bits(x, k)), b.touch_l(key_bits(y, k)),
                    b.touch_l(key_bits(x ^ y, k))};
          e.rel = par3;
          e.weight = lay.weights[0];
          b.edges.push_back(std::move(e));
        }
    } else {
      RandomSource rng(derive_seed(opts.seed, "blr-l"));
      for (uint64_t i = 0; i < opts.family_budget; ++i) {
        CellKey x = random_key(k, rng), y = random_key(k, rng);
        Edge e;
        e.vars = {b.touch_l(x), b.touch_l(y), b.touch_l(key_xor(x, y))};
        e.rel = par3;
        e.weight = Rational(1, (long)opts.family_budget);
        b.edges.push_back(std::move(e));
      }
    }
    lay.family_range[0] = {begin, b.edges.size()};
  }

  // (2) BLR on Q
  {
    size_t begin = b.edges.size();
    bool exact = exact_23 && 2 * k2 <= 62 && (1ULL << (2 * k2)) <= opts.family_exact_cap;
    lay.family_sampled[1] = !exact;
    if (exact) {
      for (uint64_t x = 0; x < (1ULL << k2); ++x)
        for (uint64_t y = 0; y < (1ULL << k2); ++y) {
          Edge e;
          e.vars = {b.touch_q(key_bits(x, (int)k2)), b.touch_q(key_bits(y, (int)k2)),
                    b.touch_q(key_bits(x ^ y, (int)k2))};
          e.rel = par3;
          e.weight = lay.weights[1];
          b.edges.push_back(std::move(e));
        }
    } else {
      RandomSource rng(derive_seed(opts.seed, "blr-q"));
      for (uint64_t i = 0; i < opts.family_budget; ++i) {
        CellKey x = random_key((int)k2, rng), y = random_key((int)k2, rng);
        Edge e;
        e.vars = {b.touch_q(x), b.touch_q(y), b.touch_q(key_xor(x, y))};
        e.rel = par3;
        e.weight = Rational(1, (long)opts.family_budget);
        b.edges.push_back(std::move(e));
      }
    }
    lay.family_range[1] = {begin, b.edges.size()};
  }

  // (3) self-corrected tensor consistency
  {
    size_t begin = b.edges.size();
    bool exact = exact_23 && 4 * (uint64_t)k + k2 <= 62 &&
                 (1ULL << (4 * k + k2)) <= opts.family_exact_cap;
    lay.family_sampled[2] = !exact;
    auto emit = [&](uint64_t x, uint64_t y, uint64_t xp, uint64_t yp, const CellKey& q,
                    const Rational& w) {
      Edge e;
      e.vars = {b.touch_l(key_bits(x ^ xp, k)), b.touch_l(key_bits(xp, k)),
                b.touch_l(key_bits(y ^ yp, k)), b.touch_l(key_bits(yp, k)),
                b.touch_q(key_xor(tensor_key(x, y, k), q)), b.touch_q(q)};
      e.rel = tensor6;
      e.weight = w;
      b.edges.push_back(std::move(e));
    };
    if (exact) {
      for (uint64_t x = 0; x < (1ULL << k); ++x)
        for (uint64_t y = 0; y < (1ULL << k); ++y)
          for (uint64_t xp = 0; xp < (1ULL << k); ++xp)
            for (uint64_t yp = 0; yp < (1ULL << k); ++yp)
              for (uint64_t q = 0; q < (1ULL << k2); ++q)
                emit(x, y, xp, yp, key_bits(q, (int)k2), lay.weights[2]);
    } else {
      RandomSource rng(derive_seed(opts.seed, "tensor"));
      for (uint64_t i = 0; i < opts.family_budget; ++i) {
        uint64_t x = random_key(k, rng)[0], y = random_key(k, rng)[0];
        uint64_t xp = random_key(k, rng)[0], yp = random_key(k, rng)[0];
        emit(x, y, xp, yp, random_key((int)k2, rng), Rational(1, (long)opts.family_budget));
      }
    }
    lay.family_range[2] = {begin, b.edges.size()};
  }

  // (4) circuit check via random combinations
  std::set<std::pair<uint64_t, CellKey>> st_images;
  {
    size_t begin = b.edges.size();
    uint64_t nr = (uint64_t)circuit.num_gates();
    bool exact = nr + (uint64_t)k + k2 <= 62 &&
                 (1ULL << (nr + k + k2)) <= opts.family_exact_cap;
    lay.family_sampled[3] = !exact;
    auto emit = [&](const Combo& c, uint64_t x, const CellKey& q, const Rational& w) {
      Edge e;
      e.vars = {b.touch_l(key_bits(c.s ^ x, k)), b.touch_l(key_bits(x, k)),
                b.touch_q(key_xor(c.t, q)), b.touch_q(q)};
      e.rel = par4[c.s0];
      e.weight = w;
      b.edges.push_back(std::move(e));
    };
    if (exact) {
      for (uint64_t r = 0; r < (1ULL << nr); ++r) {
        Combo c = combine(b.polys, r, k);
        st_images.insert({c.s, c.t});
        for (uint64_t x = 0; x < (1ULL << k); ++x)
          for (uint64_t q = 0; q < (1ULL << k2); ++q)
            emit(c, x, key_bits(q, (int)k2), lay.weights[3]);
      }
    } else {
      RandomSource rng(derive_seed(opts.seed, "circuit"));
      for (uint64_t i = 0; i < opts.family_budget; ++i) {
        uint64_t r = nr >= 64 ? rng.next_u64() : rng.uniform(1ULL << nr);
        Combo c = combine(b.polys, r, k);
        emit(c, random_key(k, rng)[0], random_key((int)k2, rng),
             Rational(1, (long)opts.family_budget));
      }
    }
    lay.family_range[3] = {begin, b.edges.size()};
  }

  // (5) X-consistency via self-correction at basis vectors
  {
    size_t begin = b.edges.size();
    uint64_t space = k <= 40 ? (1ULL << k) * (uint64_t)lay.num_x : UINT64_MAX;
    bool exact = space <= opts.family_exact_cap;
    lay.family_sampled[4] = !exact;
    if (exact) {
      for (int i = 0; i < lay.num_x; ++i)
        for (uint64_t x = 0; x < (1ULL << k); ++x) {
          Edge e;
          e.vars = {b.touch_l(key_bits((1ULL << i) ^ x, k)), b.touch_l(key_bits(x, k)),
                    lay.x_var(i)};
          e.rel = par3;
          e.weight = lay.weights[4];
          b.edges.push_back(std::move(e));
        }
    } else {
      RandomSource rng(derive_seed(opts.seed, "xcons"));
      for (uint64_t j = 0; j < opts.family_budget; ++j) {
        int i = (int)rng.uniform((uint64_t)lay.num_x);
        CellKey x = random_key(k, rng);
        Edge e;
        e.vars = {b.touch_l(key_xor(key_bits(1ULL << i, k), x)), b.touch_l(x), lay.x_var(i)};
        e.rel = par3;
        e.weight = Rational(1, (long)opts.family_budget);
        b.edges.push_back(std::move(e));
      }
    }
    lay.family_range[4] = {begin, b.edges.size()};
  }

  // alpha: max occurrences of a single table cell among step-4 constraints
  {
    std::map<VarId, uint64_t> occur;
    for (size_t i = lay.family_range[3].first; i < lay.family_range[3].second; ++i)
      for (VarId v : b.edges[i].vars) ++occur[v];
    lay.alpha = 0;
    for (auto& [v, c] : occur) lay.alpha = std::max(lay.alpha, c);
    if (lay.alpha == 0) lay.alpha = 1;
  }

  // step-4 slot padding: trivial constraints on every (s, x, t, q) slot that
  // carries no circuit-check constraint, so the hypergraph is circuit-independent
  {
    lay.padding_begin = lay.padding_end = b.edges.size();
    BigInt total_slots = 1;
    mpz_mul_2exp(total_slots.get_mpz_t(), total_slots.get_mpz_t(), 2 * (uint64_t)k + 2 * k2);
    if (!lay.family_sampled[3]) {
      BigInt images((unsigned long)st_images.size());
      BigInt st_space = 1;  // 2^{k+k^2} possible (s,t) pairs
      mpz_mul_2exp(st_space.get_mpz_t(), st_space.get_mpz_t(), (uint64_t)k + k2);
      BigInt xq = st_space;  // 2^{k+k^2} (x,q) pairs per vacant (s,t)
      lay.padding_slots = (st_space - images) * xq;
      if (total_slots <= (long)opts.padding_cap) {
        RelationPtr triv4 = Relation::trivial(4);
        Rational pw = Rational((long)lay.alpha) * lay.weights[3];
        for (uint64_t s = 0; s < (1ULL << k); ++s)
          for (uint64_t t = 0; t < (1ULL << k2); ++t) {
            if (st_images.count({s, key_bits(t, (int)k2)})) continue;
            for (uint64_t x = 0; x < (1ULL << k); ++x)
              for (uint64_t q = 0; q < (1ULL << k2); ++q) {
                Edge e;
                e.vars = {b.touch_l(key_bits(s ^ x, k)), b.touch_l(key_bits(x, k)),
                          b.touch_q(key_bits(t ^ q, (int)k2)), b.touch_q(key_bits(q, (int)k2))};
                e.rel = triv4;
                e.weight = pw;
                b.edges.push_back(std::move(e));
              }
          }
        lay.padding_emitted = true;
        lay.padding_end = b.edges.size();
      }
    } else {
      lay.padding_slots = -1;  // not computable without the full (s,t) image
    }
  }

  lay.num_variables = (int)b.next_var;
  std::vector<int> var_alph((size_t)lay.num_variables, 0);
  Instance inst({{"bool", Alphabet::boolean()}}, std::move(var_alph), std::move(b.edges));
  return {std::move(inst), std::move(lay)};
}

Assignment tester_lift(const Circuit& circuit, const TesterLayout& layout,
                       const std::vector<int>& alpha) {
  std::vector<int> z = circuit.eval_wires(alpha);
  int k = layout.k;
  CellKey zbits = zero_bits((uint64_t)k);
  for (int i = 0; i < k; ++i)
    if (z[(size_t)i]) flip_bit(zbits, (uint64_t)i);
  CellKey zz = zero_bits((uint64_t)k * (uint64_t)k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (z[(size_t)i] && z[(size_t)j]) flip_bit(zz, (uint64_t)i * (uint64_t)k + (uint64_t)j);

  auto dot = [](const CellKey& a, const CellKey& b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc ^= (uint64_t)__builtin_popcountll(a[i] & b[i]);
    return (int)(acc & 1);
  };

  Assignment out;
  out.values.resize((size_t)layout.num_variables);
  for (int i = 0; i < layout.num_x; ++i)
    out.values[(size_t)layout.x_var(i)] = LabelValue((Label)alpha[(size_t)i]);
  for (int g = 0; g < layout.num_gates; ++g)
    out.values[(size_t)(layout.y_begin + g)] =
        LabelValue((Label)z[(size_t)(layout.num_x + g)]);
  if (layout.l_dense) {
    for (uint64_t s = 0; s < (1ULL << k); ++s)
      out.values[(size_t)(layout.l_begin + (VarId)s)] =
          LabelValue((Label)dot(key_bits(s, k), zbits));
  }
  for (auto& [s, v] : layout.l_cells) out.values[(size_t)v] = LabelValue((Label)dot(s, zbits));
  if (layout.q_dense) {
    uint64_t k2 = (uint64_t)k * (uint64_t)k;
    for (uint64_t t = 0; t < (1ULL << k2); ++t)
      out.values[(size_t)(layout.q_begin + (VarId)t)] =
          LabelValue((Label)dot(key_bits(t, (int)k2), zz));
  }
  for (auto& [t, v] : layout.q_cells) out.values[(size_t)v] = LabelValue((Label)dot(t, zz));
  return out;
}

Rational violated_weight(const Instance& inst, const Assignment& a) {
  return violated_weight_in(inst, a, 0, inst.num_edges());
}

Rational violated_weight_in(const Instance& inst, const Assignment& a, size_t begin,
                            size_t end) {
  Rational w = 0;
  for (size_t i = begin; i < end && i < inst.num_edges(); ++i) {
    const Edge& e = inst.edges()[i];
    if (!edge_satisfied(inst, e, a)) w += e.weight * (long)e.mult;
  }
  return w;
}

}  // namespace pcpforge
