#include "pcpforge/graph/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace pcpforge {

static Eigen::MatrixXd adjacency(const Graph& g) {
  int n = g.num_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) += 1.0;
    if (u != v)
      a(v, u) += 1.0;
    else
      a(u, u) += 1.0;  // loop contributes 2 on the diagonal
  }
  return a;
}

static LambdaResult dense_lambda(const Graph& g, double tolerance) {
  int n = g.num_vertices();
  Eigen::MatrixXd a = adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  require(solver.info() == Eigen::Success, Errc::TooLarge, "eigensolve failed");
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  LambdaResult out;
  out.lambda1 = ev(n - 1);
  out.value = n == 1 ? 0.0 : std::max(ev(n - 2), std::abs(ev(0)));
  // residual bound for the extremal pairs actually used
  double resid = 0;
  auto check = [&](int idx) {
    Eigen::VectorXd v = solver.eigenvectors().col(idx);
    resid = std::max(resid, (a * v - ev(idx) * v).norm());
  };
  check(n - 1);
  if (n > 1) {
    check(n - 2);
    check(0);
  }
  out.error_bound = resid;
  out.certified = resid <= tolerance;
  require(out.certified, Errc::TooLarge, "eigensolve residual above tolerance");
  return out;
}

// lambda(G) for regular G above the dense cap: power iteration on
// B = A - (d/n) J, whose spectrum is that of A with lambda_1 replaced by 0.
static LambdaResult iterative_lambda(const Graph& g, double tolerance) {
  int n = g.num_vertices();
  int d = g.regular_degree();
  std::vector<double> x((size_t)n), y((size_t)n);
  uint64_t s = 0x5bd1e995;
  for (auto& xi : x) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    xi = (double)(s % 1000003) / 1000003.0 - 0.5;
  }
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    double mean = 0;
    for (double v : in) mean += v;
    mean = mean * d / n;
    std::fill(out.begin(), out.end(), -mean);
    for (int v = 0; v < n; ++v)
      for (const Graph::Slot& sl : g.slots(v)) out[(size_t)sl.to] += in[(size_t)v];
  };
  double est = 0, resid = 1e9;
  for (int iter = 0; iter < 20000 && resid > tolerance; ++iter) {
    apply(x, y);
    double norm = 0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0) {
      est = 0;
      resid = 0;
      break;
    }
    for (int i = 0; i < n; ++i) x[(size_t)i] = y[(size_t)i] / norm;
    // Rayleigh quotient and residual of (x, est) on B^2 gives |lambda| estimate
    apply(x, y);
    double rq = 0;
    for (int i = 0; i < n; ++i) rq += x[(size_t)i] * y[(size_t)i];
    est = std::sqrt(std::max(0.0, std::abs(rq)));
    double rr = 0;
    for (int i = 0; i < n; ++i) {
      double diff = y[(size_t)i] - rq * x[(size_t)i];
      rr += diff * diff;
    }
    resid = std::sqrt(rr);
  }
  LambdaResult out;
  out.lambda1 = d;
  out.value = est;
  out.error_bound = resid;
  out.certified = resid <= tolerance;
  return out;
}

LambdaResult lambda(const Graph& g, double tolerance) {
  require(g.num_vertices() >= 1, Errc::EmptyInstance, "lambda of empty graph");
  if (g.num_vertices() <= kDenseEigenCap) return dense_lambda(g, tolerance);
  require(g.is_regular(), Errc::TooLarge,
          "iterative lambda supports only regular graphs above the dense cap");
  return iterative_lambda(g, tolerance);
}

}  // namespace pcpforge
