#include "pcpforge/transform/serial.hpp"

#include "pcpforge/rng.hpp"

namespace pcpforge {

static std::vector<std::vector<size_t>> draw_combinations(size_t m, int t, int reps,
                                                          uint64_t seed) {
  RandomSource rng(seed);
  std::vector<std::vector<size_t>> out((size_t)reps);
  for (auto& combo : out) {
    combo.resize((size_t)t);
    for (auto& e : combo) e = (size_t)rng.uniform((uint64_t)m);
  }
  return out;
}

std::vector<std::vector<size_t>> serial_repeat_trace(const Instance& inst, int t,
                                                     int repetitions, uint64_t seed) {
  require(t >= 1 && repetitions >= 1, Errc::InvalidArgument, "serial repetition parameters");
  require(inst.num_edges() > 0, Errc::EmptyInstance, "serial repetition of edgeless instance");
  return draw_combinations(inst.num_edges(), t, repetitions, seed);
}

Instance serial_repeat(const Instance& inst, int t, int repetitions, uint64_t seed) {
  auto trace = serial_repeat_trace(inst, t, repetitions, seed);
  std::vector<Edge> edges;
  edges.reserve((size_t)repetitions);
  for (const auto& combo : trace) {
    Edge e;
    std::vector<Relation::ConjunctPart> parts;
    for (size_t src : combo) {
      const Edge& se = inst.edges()[src];
      std::vector<int> pos;
      for (VarId v : se.vars) {
        pos.push_back((int)e.vars.size());
        e.vars.push_back(v);
      }
      parts.push_back({se.rel, std::move(pos)});
    }
    e.rel = Relation::conjunction((int)e.vars.size(), std::move(parts));
    edges.push_back(std::move(e));
  }
  return Instance(inst.alphabets(), inst.var_alphabet(), std::move(edges),
                  inst.has_marked() ? std::optional(inst.marked()) : std::nullopt);
}

}  // namespace pcpforge
