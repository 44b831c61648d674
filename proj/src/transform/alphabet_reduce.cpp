#include "pcpforge/transform/alphabet_reduce.hpp"

#include <algorithm>

namespace pcpforge {

HadamardCodebook HadamardCodebook::for_size(uint64_t alphabet_size) {
  require(alphabet_size >= 2, Errc::InvalidArgument, "alphabet too small to encode");
  require(alphabet_size <= 64, Errc::TesterTooLarge,
          "Hadamard block length would exceed 64 bits");
  HadamardCodebook code;
  code.b = 0;
  uint64_t p = 1;
  while (p < alphabet_size) {
    p *= 2;
    ++code.b;
  }
  code.b = std::max(code.b, 1);
  code.ell = 1 << code.b;
  for (uint64_t m = 0; m < alphabet_size; ++m) {
    uint64_t word = 0;
    for (int s = 0; s < code.ell; ++s)
      if (__builtin_popcountll(m & (uint64_t)s) & 1) word |= 1ULL << s;
    code.codewords.push_back(word);
  }
  return code;
}

namespace {

// DNF circuit accepting exactly the codeword pairs of accepted label pairs.
Circuit relation_circuit(const Relation& rel, const HadamardCodebook& code,
                         const std::vector<LabelValue>& left_labels,
                         const std::vector<LabelValue>& right_labels) {
  int ell = code.ell;
  int num_inputs = 2 * ell;
  std::vector<Gate> gates;
  std::vector<int> not_cache((size_t)num_inputs, -1);
  auto literal = [&](int input, int bit) {
    if (bit) return input;
    if (not_cache[(size_t)input] < 0) {
      gates.push_back({Gate::Op::Not, input, 0});
      not_cache[(size_t)input] = num_inputs + (int)gates.size() - 1;
    }
    return not_cache[(size_t)input];
  };

  std::vector<int> terms;
  for (size_t ia = 0; ia < left_labels.size(); ++ia)
    for (size_t ib = 0; ib < right_labels.size(); ++ib) {
      LabelValue pair_arr[2] = {left_labels[ia], right_labels[ib]};
      if (!rel.accepts(pair_arr)) continue;
      uint64_t ca = code.encode((int)ia), cb = code.encode((int)ib);
      int acc = -1;
      for (int i = 0; i < ell; ++i) {
        int lit = literal(i, (int)(ca >> i & 1));
        if (acc < 0)
          acc = lit;
        else {
          gates.push_back({Gate::Op::And, acc, lit});
          acc = num_inputs + (int)gates.size() - 1;
        }
      }
      for (int i = 0; i < ell; ++i) {
        int lit = literal(ell + i, (int)(cb >> i & 1));
        gates.push_back({Gate::Op::And, acc, lit});
        acc = num_inputs + (int)gates.size() - 1;
      }
      terms.push_back(acc);
    }

  int out;
  if (terms.empty()) {
    // constant false: x0 AND NOT x0
    int nx = literal(0, 0);
    gates.push_back({Gate::Op::And, 0, nx});
    out = num_inputs + (int)gates.size() - 1;
  } else {
    out = terms[0];
    for (size_t i = 1; i < terms.size(); ++i) {
      gates.push_back({Gate::Op::Or, out, terms[i]});
      out = num_inputs + (int)gates.size() - 1;
    }
    if (gates.empty()) {  // single accepted pair with ell == 1 cannot happen (ell >= 2)
      gates.push_back({Gate::Op::And, out, out});
      out = num_inputs;
    }
  }
  return Circuit(num_inputs, std::move(gates), out);
}

}  // namespace

AlphabetReduceResult alphabet_reduce(const Instance& inst, const TesterOptions& opts) {
  require(inst.is_binary(), Errc::NonBinaryInstance, "alphabet reduction needs binary input");
  require(inst.num_edges() > 0, Errc::EmptyInstance, "nothing to reduce");
  int n = inst.num_variables();

  uint64_t max_sigma = 2;
  std::vector<std::vector<LabelValue>> source_labels((size_t)n);
  for (int v = 0; v < n; ++v) {
    source_labels[(size_t)v] = inst.alphabet_of(v)->enumerate();
    max_sigma = std::max<uint64_t>(max_sigma, source_labels[(size_t)v].size());
  }

  AlphabetReduceMap map;
  map.code = HadamardCodebook::for_size(max_sigma);
  map.source_labels = std::move(source_labels);
  map.fallback_index = 0;
  int ell = map.code.ell;

  // global X blocks first
  map.x_block.assign((size_t)n, {});
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < ell; ++i) map.x_block[(size_t)v].push_back((VarId)(v * ell + i));
  VarId next_var = (VarId)(n * ell);

  // circuits, padded to a common size
  std::vector<Circuit> circuits;
  circuits.reserve(inst.num_edges());
  int max_gates = 0;
  for (const auto& e : inst.edges()) {
    Circuit c = relation_circuit(*e.rel, map.code, map.source_labels[(size_t)e.vars[0]],
                                 map.source_labels[(size_t)e.vars[1]]);
    max_gates = std::max(max_gates, c.num_gates());
    circuits.push_back(std::move(c));
  }
  for (auto& c : circuits) c = c.padded(max_gates);
  map.circuit_size = max_gates;
  map.k = 2 * ell + max_gates;

  // per-edge testers with shared sampling seeds, remapped into the global space
  std::vector<Edge> union_edges;
  for (size_t ei = 0; ei < inst.num_edges(); ++ei) {
    TesterResult tr = assignment_tester(circuits[ei], opts);
    const Edge& src = inst.edges()[ei];
    VarId offset = next_var - (VarId)(2 * ell);  // local non-X ids start at 2*ell
    auto remap = [&](VarId local) -> VarId {
      if (local < (VarId)ell) return map.x_block[(size_t)src.vars[0]][(size_t)local];
      if (local < (VarId)(2 * ell)) return map.x_block[(size_t)src.vars[1]][(size_t)(local - ell)];
      return offset + local;
    };
    for (const Edge& te : tr.instance.edges()) {
      Edge e = te;
      for (auto& v : e.vars) v = remap(v);
      // per-edge testers carry the source edge's weight and multiplicity
      e.weight = te.weight * src.weight;
      e.mult = te.mult * src.mult;
      union_edges.push_back(std::move(e));
    }
    next_var += (VarId)(tr.layout.num_variables - 2 * ell);
    map.edge_var_offset.push_back(offset);
    map.per_edge.push_back(std::move(tr.layout));
  }

  std::vector<int> var_alph((size_t)next_var, 0);
  Instance six_ary({{"bool", Alphabet::boolean()}}, std::move(var_alph),
                   std::move(union_edges));
  SparsifyResult sp = sparsify(six_ary);

  AlphabetReduceResult out;
  out.map = std::move(map);
  out.sparsified = std::move(sp);
  out.instance = out.sparsified.instance;
  return out;
}

Assignment alphabet_reduce_lift(const AlphabetReduceResult& ar, const Instance& source,
                                const Assignment& sigma) {
  const AlphabetReduceMap& map = ar.map;
  int ell = map.code.ell;
  int n = source.num_variables();

  // label index per variable
  std::vector<int> index((size_t)n, -1);
  for (int v = 0; v < n; ++v) {
    const auto& labels = map.source_labels[(size_t)v];
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == sigma.values[(size_t)v]) {
        index[(size_t)v] = (int)i;
        break;
      }
    require(index[(size_t)v] >= 0, Errc::DomainMismatch, "label outside declared alphabet");
  }

  // pre-sparsification global assignment
  Assignment pre;
  int pre_vars = 0;
  for (size_t ei = 0; ei < map.per_edge.size(); ++ei)
    pre_vars = std::max(pre_vars, (int)(map.edge_var_offset[ei] +
                                        (VarId)map.per_edge[ei].num_variables));
  pre_vars = std::max(pre_vars, n * ell);
  pre.values.assign((size_t)pre_vars, LabelValue((Label)0));
  for (int v = 0; v < n; ++v) {
    uint64_t cw = map.code.encode(index[(size_t)v]);
    for (int i = 0; i < ell; ++i)
      pre.values[(size_t)map.x_block[(size_t)v][(size_t)i]] =
          LabelValue((Label)(cw >> i & 1));
  }
  for (size_t ei = 0; ei < map.per_edge.size(); ++ei) {
    const Edge& src = source.edges()[ei];
    std::vector<int> alpha;
    uint64_t cu = map.code.encode(index[(size_t)src.vars[0]]);
    uint64_t cv = map.code.encode(index[(size_t)src.vars[1]]);
    for (int i = 0; i < ell; ++i) alpha.push_back((int)(cu >> i & 1));
    for (int i = 0; i < ell; ++i) alpha.push_back((int)(cv >> i & 1));
    Circuit c = relation_circuit(*src.rel, map.code, map.source_labels[(size_t)src.vars[0]],
                                 map.source_labels[(size_t)src.vars[1]])
                    .padded(map.circuit_size);
    Assignment local = tester_lift(c, map.per_edge[ei], alpha);
    for (int lv = 2 * ell; lv < map.per_edge[ei].num_variables; ++lv)
      pre.values[(size_t)(map.edge_var_offset[ei] + lv)] = local.values[(size_t)lv];
  }
  return sparsify_lift(ar.sparsified, ar.instance, pre);
}

}  // namespace pcpforge
