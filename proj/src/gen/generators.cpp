#include "pcpforge/gen/generators.hpp"

#include <algorithm>

#include "pcpforge/rng.hpp"

namespace pcpforge {

CycleSpec all_ones_cycle(int n) { return {n, std::vector<int>((size_t)n, 1)}; }

Instance e2lin_cycle(const CycleSpec& spec) {
  require(spec.n >= 4 && spec.n % 2 == 0, Errc::OddLength, "cycle length must be even, >= 4");
  require((int)spec.pattern.size() == spec.n, Errc::InvalidArgument,
          "pattern length must equal n");
  std::vector<Edge> edges;
  edges.reserve((size_t)spec.n);
  for (int i = 0; i < spec.n; ++i) {
    Edge e;
    e.vars = {(VarId)i, (VarId)((i + 1) % spec.n)};
    e.rel = Relation::parity2(spec.pattern[(size_t)i]);
    edges.push_back(std::move(e));
  }
  return Instance::uniform(spec.n, Alphabet::boolean(), std::move(edges), std::nullopt, "bool");
}

std::pair<Instance, Instance> lemma41_pair(int n) {
  require(n >= 4 && n % 2 == 0, Errc::OddLength, "pair length must be even, >= 4");
  Instance base = e2lin_cycle(all_ones_cycle(n));
  // vertices are v_1..v_n with v_i stored at index i-1; edge i-1 = (v_i, v_{i+1})
  CycleSpec tilde = all_ones_cycle(n);
  tilde.pattern[(size_t)(n / 2 - 1)] = 0;  // (v_{n/2}, v_{n/2+1})
  tilde.pattern[(size_t)(n - 1)] = 0;      // (v_n, v_1)
  return {std::move(base), e2lin_cycle(tilde)};
}

Instance random_instance(int n, int m, int alphabet_size, RelationFamily family, uint64_t seed) {
  require(n >= 2 && m >= 0 && alphabet_size >= 2, Errc::InvalidArgument,
          "random_instance parameters");
  RandomSource rng(seed);
  AlphabetPtr alph = alphabet_size == 2 ? Alphabet::boolean() : Alphabet::range(alphabet_size);

  std::vector<Label> planted((size_t)n);
  for (auto& a : planted) a = (Label)rng.uniform((uint64_t)alphabet_size);

  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    VarId u = (VarId)rng.uniform((uint64_t)n);
    VarId v = (VarId)rng.uniform((uint64_t)(n - 1));
    if (v >= u) ++v;
    Edge e;
    e.vars = {u, v};
    switch (family) {
      case RelationFamily::Parity:
        require(alphabet_size == 2, Errc::InvalidArgument, "parity family needs booleans");
        e.rel = Relation::parity2((int)rng.uniform(2));
        break;
      case RelationFamily::PlantedSatisfiable: {
        if (alphabet_size == 2) {
          e.rel = Relation::parity2((planted[(size_t)u] + planted[(size_t)v]) & 1);
        } else {
          std::vector<std::vector<Label>> acc = {{planted[(size_t)u], planted[(size_t)v]}};
          int extra = (int)rng.uniform(4);
          for (int k = 0; k < extra; ++k)
            acc.push_back({(Label)rng.uniform((uint64_t)alphabet_size),
                           (Label)rng.uniform((uint64_t)alphabet_size)});
          e.rel = Relation::tuples(2, std::move(acc));
        }
        break;
      }
      case RelationFamily::RandomTuples: {
        std::vector<std::vector<Label>> acc;
        int cnt = 1 + (int)rng.uniform((uint64_t)(alphabet_size * alphabet_size));
        for (int k = 0; k < cnt; ++k)
          acc.push_back({(Label)rng.uniform((uint64_t)alphabet_size),
                         (Label)rng.uniform((uint64_t)alphabet_size)});
        e.rel = Relation::tuples(2, std::move(acc));
        break;
      }
    }
    edges.push_back(std::move(e));
  }
  return Instance::uniform(n, alph, std::move(edges), std::nullopt, "sigma");
}

Instance random_regular_planted(int n, int d, uint64_t seed) {
  require(n >= 2 && d >= 1 && (int64_t)n * d % 2 == 0, Errc::InvalidArgument,
          "n*d must be even");
  RandomSource rng(seed);
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  for (size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.uniform(i)]);

  std::vector<Label> planted((size_t)n);
  for (auto& a : planted) a = (Label)rng.uniform(2);

  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
    VarId u = (VarId)stubs[i], v = (VarId)stubs[i + 1];
    Edge e;
    e.vars = {u, v};
    e.rel = Relation::parity2((planted[(size_t)u] + planted[(size_t)v]) & 1);
    edges.push_back(std::move(e));
  }
  return Instance::uniform(n, Alphabet::boolean(), std::move(edges), std::nullopt, "bool");
}

Instance random_label_cover(int nu, int nv, int m, int sigma_u, int sigma_v, uint64_t seed) {
  require(nu >= 1 && nv >= 1 && m >= 1 && sigma_u >= 2 && sigma_v >= 2, Errc::InvalidArgument,
          "label cover parameters");
  RandomSource rng(seed);
  std::vector<Label> planted((size_t)(nu + nv));
  for (int u = 0; u < nu; ++u) planted[(size_t)u] = (Label)rng.uniform((uint64_t)sigma_u);
  for (int v = 0; v < nv; ++v) planted[(size_t)(nu + v)] = (Label)rng.uniform((uint64_t)sigma_v);

  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    VarId u = (VarId)rng.uniform((uint64_t)nu);
    VarId v = (VarId)(nu + (int)rng.uniform((uint64_t)nv));
    std::vector<Label> map((size_t)sigma_u);
    for (auto& b : map) b = (Label)rng.uniform((uint64_t)sigma_v);
    map[(size_t)planted[(size_t)u]] = planted[(size_t)v];  // keep the planted pair accepted
    Edge e;
    e.vars = {u, v};
    e.rel = Relation::projection(std::move(map));
    edges.push_back(std::move(e));
  }
  auto left = Alphabet::range(sigma_u);
  auto right = Alphabet::range(sigma_v);
  std::vector<int> var_alph((size_t)(nu + nv), 0);
  for (int v = 0; v < nv; ++v) var_alph[(size_t)(nu + v)] = 1;
  return Instance({{"sigma_u", left}, {"sigma_v", right}}, std::move(var_alph),
                  std::move(edges));
}

}  // namespace pcpforge
