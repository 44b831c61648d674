#include "pcpforge/transform/circuit.hpp"

namespace pcpforge {

Circuit::Circuit(int num_inputs, std::vector<Gate> gates, int output)
    : num_inputs_(num_inputs), gates_(std::move(gates)), output_(output) {
  require(num_inputs_ >= 1, Errc::InvalidArgument, "circuit needs inputs");
  require(!gates_.empty(), Errc::InvalidArgument, "circuit needs at least one gate");
  for (int i = 0; i < (int)gates_.size(); ++i) {
    const Gate& g = gates_[(size_t)i];
    int wire = num_inputs_ + i;
    require(g.a >= 0 && g.a < wire, Errc::InvalidArgument, "gate child must precede gate");
    if (g.op != Gate::Op::Not)
      require(g.b >= 0 && g.b < wire, Errc::InvalidArgument, "gate child must precede gate");
  }
  require(output_ >= num_inputs_ && output_ < num_wires(), Errc::InvalidArgument,
          "output must be a gate wire");
}

std::vector<int> Circuit::eval_wires(const std::vector<int>& inputs) const {
  require((int)inputs.size() == num_inputs_, Errc::ArityMismatch, "circuit input size");
  std::vector<int> w(inputs);
  w.resize((size_t)num_wires());
  for (int i = 0; i < num_gates(); ++i) {
    const Gate& g = gates_[(size_t)i];
    int& out = w[(size_t)(num_inputs_ + i)];
    switch (g.op) {
      case Gate::Op::And: out = w[(size_t)g.a] & w[(size_t)g.b]; break;
      case Gate::Op::Or: out = w[(size_t)g.a] | w[(size_t)g.b]; break;
      case Gate::Op::Not: out = 1 - w[(size_t)g.a]; break;
    }
  }
  return w;
}

bool Circuit::eval(const std::vector<int>& inputs) const {
  return eval_wires(inputs)[(size_t)output_] != 0;
}

Circuit Circuit::padded(int target_gates) const {
  require(target_gates >= num_gates(), Errc::InvalidArgument, "pad target below gate count");
  std::vector<Gate> gates = gates_;
  while ((int)gates.size() < target_gates) gates.push_back({Gate::Op::And, 0, 0});
  return Circuit(num_inputs_, std::move(gates), output_);
}

int QuadPoly::eval(const std::vector<int>& z) const {
  int acc = c0;
  for (int i = 0; i < k; ++i)
    if (get_bit(lin, (uint64_t)i)) acc ^= z[(size_t)i] & 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (get_bit(quad, (uint64_t)i * (uint64_t)k + (uint64_t)j))
        acc ^= z[(size_t)i] & z[(size_t)j] & 1;
  return acc;
}

std::vector<QuadPoly> arithmetize(const Circuit& c) {
  int k = c.num_wires();  // |X| + |C|
  std::vector<QuadPoly> out;
  out.reserve((size_t)c.num_gates());
  for (int i = 0; i < c.num_gates(); ++i) {
    const Gate& g = c.gates()[(size_t)i];
    int self = c.num_inputs() + i;
    bool is_output = self == c.output();
    QuadPoly p;
    p.k = k;
    p.lin = zero_bits((uint64_t)k);
    p.quad = zero_bits((uint64_t)k * (uint64_t)k);
    auto add_lin = [&](int w) { flip_bit(p.lin, (uint64_t)w); };
    auto add_quad = [&](int w1, int w2) {
      flip_bit(p.quad, (uint64_t)w1 * (uint64_t)k + (uint64_t)w2);
    };
    switch (g.op) {
      case Gate::Op::And:
        // z_a z_b - z_g; output gate: z_a z_b - 1
        add_quad(g.a, g.b);
        if (is_output)
          p.c0 ^= 1;
        else
          add_lin(self);
        break;
      case Gate::Op::Or:
        // z_a + z_b + z_a z_b - z_g
        add_lin(g.a);
        flip_bit(p.lin, (uint64_t)g.b);
        add_quad(g.a, g.b);
        if (is_output)
          p.c0 ^= 1;
        else
          add_lin(self);
        break;
      case Gate::Op::Not:
        // z_a + z_g - 1; output gate: z_a + 1 - 1 = z_a
        add_lin(g.a);
        if (!is_output) {
          add_lin(self);
          p.c0 ^= 1;
        }
        break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace pcpforge
