#include "pcpforge/transform/gadgets.hpp"

#include <algorithm>
#include <map>

namespace pcpforge {

namespace {

int bits_for(uint64_t k) {
  int b = 0;
  uint64_t p = 1;
  while (p < k) {
    p *= 2;
    ++b;
  }
  return std::max(b, 1);
}

// disjunction of three literals over positions, with negation mask: position i
// is negated iff (mask >> i) & 1; rejects exactly the all-literals-false tuple.
RelationPtr clause_rel(int mask) {
  std::vector<std::vector<Label>> acc;
  for (int m = 0; m < 8; ++m) {
    bool sat = false;
    for (int i = 0; i < 3; ++i) {
      int bit = m >> i & 1;
      if ((bit ^ (mask >> i & 1)) == 1) sat = true;
    }
    if (sat) acc.push_back({m & 1, m >> 1 & 1, m >> 2 & 1});
  }
  return Relation::tuples(3, std::move(acc));
}

struct Lit {
  VarId var;
  bool neg;
};

}  // namespace

int clause_negation_mask(const Relation& rel) {
  require(rel.arity() == 3, Errc::NotE3SAT, "constraint is not 3-ary");
  std::vector<int> rejecting;
  for (int m = 0; m < 8; ++m) {
    LabelValue t[3] = {LabelValue(m & 1), LabelValue(m >> 1 & 1), LabelValue(m >> 2 & 1)};
    if (!rel.accepts(std::span<const LabelValue>(t, 3))) rejecting.push_back(m);
  }
  require(rejecting.size() == 1, Errc::NotE3SAT,
          "constraint is not a 3-literal disjunction");
  return rejecting[0];  // literal i is "x" when bit i = 0 in the rejecting tuple... inverted below
}

E3SatResult to_e3sat(const Instance& label_cover, uint64_t cap) {
  require(label_cover.is_binary(), Errc::NotLabelCover, "expects binary constraints");
  int n = label_cover.num_variables();

  E3SatMap map;
  map.block.resize((size_t)n);
  map.source_labels.resize((size_t)n);
  VarId next = 0;
  for (int v = 0; v < n; ++v) {
    map.source_labels[(size_t)v] = label_cover.alphabet_of(v)->enumerate(cap);
    int b = bits_for(map.source_labels[(size_t)v].size());
    map.block[(size_t)v] = {next, b};
    next += (VarId)b;
  }
  map.num_bit_vars = (int)next;

  // uniform clause capacity K and aux capacity per block, from bit widths only
  int max_w = 0;
  for (const auto& e : label_cover.edges()) {
    int w = map.block[(size_t)e.vars[0]].second + map.block[(size_t)e.vars[1]].second;
    max_w = std::max(max_w, w);
  }
  int rows = 1 << max_w;
  int clauses_per_row = std::max(max_w - 2, 1);
  map.clauses_per_block = rows * clauses_per_row;
  int aux_per_row = std::max(max_w - 3, 0);

  std::vector<Edge> edges;
  std::map<int, RelationPtr> clause_cache;
  auto emit_clause = [&](const Lit& a, const Lit& b, const Lit& c) {
    int mask = (a.neg ? 1 : 0) | (b.neg ? 2 : 0) | (c.neg ? 4 : 0);
    auto it = clause_cache.find(mask);
    if (it == clause_cache.end()) it = clause_cache.emplace(mask, clause_rel(mask)).first;
    Edge e;
    e.vars = {a.var, b.var, c.var};
    e.rel = it->second;
    edges.push_back(std::move(e));
  };

  VarId aux_base = next;
  for (size_t ei = 0; ei < label_cover.num_edges(); ++ei) {
    const Edge& e = label_cover.edges()[ei];
    auto [ub, ubits] = map.block[(size_t)e.vars[0]];
    auto [vb, vbits] = map.block[(size_t)e.vars[1]];
    int w = ubits + vbits;
    size_t block_start = edges.size();
    VarId aux_block = aux_base + (VarId)(ei * (size_t)rows * (size_t)aux_per_row);

    const auto& left = map.source_labels[(size_t)e.vars[0]];
    const auto& right = map.source_labels[(size_t)e.vars[1]];
    for (int row = 0; row < (1 << w); ++row) {
      // does this bit row decode to an accepted label pair?
      int ia = row & ((1 << ubits) - 1);
      int ib = row >> ubits;
      bool accepted = false;
      if (ia < (int)left.size() && ib < (int)right.size()) {
        LabelValue t[2] = {left[(size_t)ia], right[(size_t)ib]};
        accepted = e.rel->accepts(std::span<const LabelValue>(t, 2));
      }
      if (accepted) continue;

      // clause excluding this row: literal i is x_i if row bit i = 0, else ~x_i
      std::vector<Lit> lits;
      for (int i = 0; i < w; ++i) {
        VarId bit_var = i < ubits ? ub + (VarId)i : vb + (VarId)(i - ubits);
        lits.push_back({bit_var, (row >> i & 1) != 0});
      }
      VarId aux_row = aux_block + (VarId)((size_t)row * (size_t)aux_per_row);
      if (w == 1)
        emit_clause(lits[0], lits[0], lits[0]);
      else if (w == 2)
        emit_clause(lits[0], lits[1], lits[1]);
      else if (w == 3)
        emit_clause(lits[0], lits[1], lits[2]);
      else {
        // chain: (l1 v l2 v y1), (~y1 v l3 v y2), ..., (~y_{w-3} v l_{w-1} v l_w)
        emit_clause(lits[0], lits[1], {aux_row, false});
        for (int i = 2; i < w - 2; ++i)
          emit_clause({aux_row + (VarId)(i - 2), true}, lits[(size_t)i],
                      {aux_row + (VarId)(i - 1), false});
        emit_clause({aux_row + (VarId)(w - 4), true}, lits[(size_t)(w - 2)],
                    lits[(size_t)(w - 1)]);
      }
    }
    // pad to exactly K clauses by duplicating the first clause of the block
    // (or a tautological clause when the block is empty)
    if (edges.size() == block_start) {
      VarId x0 = ub;
      emit_clause({x0, false}, {x0, true}, {x0, false});
    }
    Edge first = edges[block_start];
    while (edges.size() - block_start < (size_t)map.clauses_per_block) edges.push_back(first);
    require(edges.size() - block_start == (size_t)map.clauses_per_block, Errc::InvalidArgument,
            "block exceeded the uniform clause budget");
  }

  int total_vars =
      map.num_bit_vars + (int)(label_cover.num_edges() * (size_t)rows * (size_t)aux_per_row);
  E3SatResult out;
  out.map = std::move(map);
  out.instance = Instance::uniform(total_vars, Alphabet::boolean(), std::move(edges),
                                   std::nullopt, "bool");
  return out;
}

Assignment e3sat_encode(const E3SatResult& sat, const Instance& source,
                        const Assignment& sigma) {
  const E3SatMap& map = sat.map;
  Assignment out;
  out.values.assign((size_t)sat.instance.num_variables(), LabelValue((Label)0));
  for (int v = 0; v < source.num_variables(); ++v) {
    const auto& labels = map.source_labels[(size_t)v];
    int idx = -1;
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == sigma.values[(size_t)v]) {
        idx = (int)i;
        break;
      }
    require(idx >= 0, Errc::DomainMismatch, "label outside declared alphabet");
    auto [base, bits] = map.block[(size_t)v];
    for (int i = 0; i < bits; ++i)
      out.values[(size_t)(base + i)] = LabelValue((Label)(idx >> i & 1));
  }
  // chain variables: y_j = true iff all literals before position j+1 are false;
  // unreferenced chains keep 0
  int max_w = 0;
  for (const auto& e : source.edges())
    max_w = std::max(max_w, map.block[(size_t)e.vars[0]].second +
                                map.block[(size_t)e.vars[1]].second);
  int rows = 1 << max_w;
  int aux_per_row = std::max(max_w - 3, 0);
  VarId aux_base = (VarId)map.num_bit_vars;
  for (size_t ei = 0; ei < source.num_edges(); ++ei) {
    const Edge& e = source.edges()[ei];
    auto [ub, ubits] = map.block[(size_t)e.vars[0]];
    auto [vb, vbits] = map.block[(size_t)e.vars[1]];
    int w = ubits + vbits;
    if (w <= 3) continue;
    for (int row = 0; row < (1 << w); ++row) {
      VarId aux_row =
          aux_base + (VarId)(ei * (size_t)rows * (size_t)aux_per_row) +
          (VarId)((size_t)row * (size_t)aux_per_row);
      bool any_true = false;
      for (int i = 0; i < w - 2; ++i) {
        VarId bit_var = i < ubits ? ub + (VarId)i : vb + (VarId)(i - ubits);
        bool lit = (out.values[(size_t)bit_var].plain() != 0) != ((row >> i & 1) != 0);
        any_true = any_true || lit;
        if (i >= 1 && i <= w - 3)
          out.values[(size_t)(aux_row + i - 1)] = LabelValue((Label)(any_true ? 0 : 1));
      }
    }
  }
  return out;
}

Instance e3sat_to_3lin(const Instance& e3sat) {
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, RelationPtr> cache;  // (arity, target) -> parity relation
  auto parity = [&](int arity, int target) {
    auto it = cache.find({arity, target});
    if (it != cache.end()) return it->second;
    std::vector<std::vector<Label>> acc;
    for (int m = 0; m < (1 << arity); ++m) {
      if (__builtin_popcount((unsigned)m) % 2 != target) continue;
      std::vector<Label> t((size_t)arity);
      for (int i = 0; i < arity; ++i) t[(size_t)i] = m >> i & 1;
      acc.push_back(std::move(t));
    }
    return cache.emplace(std::make_pair(arity, target), Relation::tuples(arity, std::move(acc)))
        .first->second;
  };

  for (const auto& e : e3sat.edges()) {
    int mask = clause_negation_mask(*e.rel);
    // rejecting tuple bit i = value of x_i that makes literal i false, so the
    // literal is x_i + mask_i; "sum of literals over S = 1" becomes
    // "sum of x_i over S = 1 + sum of mask_i".
    auto lit_target = [&](std::vector<int> positions) {
      int target = 1;
      for (int i : positions) target ^= mask >> i & 1;
      return target;
    };
    auto emit = [&](std::vector<int> positions) {
      Edge out;
      for (int i : positions) out.vars.push_back(e.vars[(size_t)i]);
      out.rel = parity((int)positions.size(), lit_target(positions));
      out.weight = e.weight;
      out.mult = e.mult;
      edges.push_back(std::move(out));
    };
    emit({0});
    emit({1});
    emit({2});
    emit({0, 1});
    emit({1, 2});
    emit({0, 2});
    emit({0, 1, 2});
  }
  return Instance(e3sat.alphabets(), e3sat.var_alphabet(), std::move(edges));
}

}  // namespace pcpforge
