#include "pcpforge/transform/sparsify.hpp"

#include <map>

#include "pcpforge/csp/ops.hpp"

namespace pcpforge {

SparsifyResult sparsify(const Instance& inst) {
  for (int v = 0; v < inst.num_variables(); ++v)
    require(inst.alphabet_of(v)->kind() == Alphabet::Kind::Boolean, Errc::DomainMismatch,
            "sparsification expects Boolean variables");

  int n = inst.num_variables();
  std::vector<std::pair<std::string, AlphabetPtr>> alphabets = inst.alphabets();
  std::vector<int> var_alph = inst.var_alphabet();
  std::vector<Edge> out_edges;
  SparsifyMap map;

  // shared alphabets/relations per satisfying-view set
  std::map<std::vector<Label>, int> view_alphabet_index;
  std::map<std::pair<std::vector<Label>, int>, RelationPtr> proj_cache;

  VarId next_var = (VarId)n;
  for (size_t ei = 0; ei < inst.num_edges(); ++ei) {
    const Edge& e = inst.edges()[ei];
    int t = (int)e.vars.size();
    require(t >= 2, Errc::ArityMismatch, "cannot sparsify unary constraints");
    require(t <= 6, Errc::ArityTooHigh, "sparsification caps arity at 6");

    // satisfying local views, encoded little-endian (bit i = position i)
    std::vector<Label> views;
    std::vector<LabelValue> tuple((size_t)t);
    for (int view = 0; view < (1 << t); ++view) {
      bool ok = true;
      for (int i = 0; i < t; ++i) tuple[(size_t)i] = LabelValue((Label)(view >> i & 1));
      // duplicated variables must read consistently
      for (int i = 0; ok && i < t; ++i)
        for (int j = i + 1; j < t; ++j)
          if (e.vars[(size_t)i] == e.vars[(size_t)j] &&
              ((view >> i & 1) != (view >> j & 1)))
            ok = false;
      if (ok && e.rel->accepts(tuple)) views.push_back((Label)view);
    }
    require(!views.empty(), Errc::InvalidArgument,
            "unsatisfiable constraint cannot be sparsified into a projection");

    auto [ait, fresh] = view_alphabet_index.try_emplace(views, (int)alphabets.size());
    if (fresh)
      alphabets.push_back({"views" + std::to_string(ait->second),
                           Alphabet::explicit_labels(views)});
    VarId w = next_var++;
    var_alph.push_back(ait->second);
    map.w_var.push_back(w);
    map.edge_vars.push_back(e.vars);

    for (int i = 0; i < t; ++i) {
      auto key = std::make_pair(views, i);
      auto pit = proj_cache.find(key);
      if (pit == proj_cache.end()) {
        std::vector<Label> proj((size_t)(1 << t), 0);
        for (Label view : views) proj[(size_t)view] = view >> i & 1;
        pit = proj_cache.emplace(key, Relation::projection(std::move(proj))).first;
      }
      Edge be;
      be.vars = {w, e.vars[(size_t)i]};
      be.rel = pit->second;
      be.weight = e.weight;
      be.mult = e.mult;
      out_edges.push_back(std::move(be));
    }
  }

  Instance out(std::move(alphabets), std::move(var_alph), std::move(out_edges));
  return {std::move(out), std::move(map)};
}

Assignment sparsify_lift(const SparsifyResult& sp, const Instance& original,
                         const Assignment& sigma) {
  Assignment out = sigma;
  out.values.resize((size_t)sp.instance.num_variables());
  for (size_t ei = 0; ei < sp.map.w_var.size(); ++ei) {
    Label view = 0;
    const auto& vars = sp.map.edge_vars[ei];
    for (int i = 0; i < (int)vars.size(); ++i)
      view |= (sigma.values[(size_t)vars[(size_t)i]].plain() & 1) << i;
    out.values[(size_t)sp.map.w_var[ei]] = LabelValue(view);
  }
  (void)original;
  return out;
}

}  // namespace pcpforge
