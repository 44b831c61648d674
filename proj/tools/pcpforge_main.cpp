#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcpforge/csp/serialize.hpp"
#include "pcpforge/gen/generators.hpp"
#include "pcpforge/graph/spectral.hpp"
#include "pcpforge/harness/verify.hpp"
#include "pcpforge/nonsignal/local.hpp"
#include "pcpforge/oracle/brute_force.hpp"
#include "pcpforge/oracle/diagnostics.hpp"
#include "pcpforge/oracle/sensitivity.hpp"
#include "pcpforge/pipeline/pipeline.hpp"
#include "pcpforge/recover/recover.hpp"
#include "pcpforge/rng.hpp"
#include "pcpforge/transform/alphabet_reduce.hpp"
#include "pcpforge/transform/degree_reduce.hpp"
#include "pcpforge/transform/expanderize.hpp"
#include "pcpforge/transform/fglss.hpp"
#include "pcpforge/transform/gadgets.hpp"
#include "pcpforge/transform/power.hpp"
#include "pcpforge/transform/serial.hpp"
#include "pcpforge/transform/sparsify.hpp"

using namespace pcpforge;
using nlohmann::json;

namespace {

std::string timestamp_now() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json base_report(const std::string& kind, uint64_t seed) {
  json j;
  j["tool"] = "pcp-forge";
  j["schema_version"] = 1;
  j["kind"] = kind;
  j["seed"] = seed;
  j["timestamp"] = timestamp_now();
  return j;
}

void emit(const json& j, const std::string& out, const std::string& format) {
  if (format == "csv" && j.contains("rows")) {
    std::string text;
    const json& rows = j["rows"];
    if (!rows.empty()) {
      bool first = true;
      for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
        if (!first) text += ",";
        text += it.key();
        first = false;
      }
      text += "\n";
      for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          if (!first) text += ",";
          text += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
          first = false;
        }
        text += "\n";
      }
    }
    if (out.empty())
      std::cout << text;
    else
      write_file(out, text);
    return;
  }
  std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

Instance load_instance(const std::string& path) { return deserialize(read_file(path)); }

std::vector<int> parse_pattern(const std::string& pattern, int n) {
  std::vector<int> bits;
  if (pattern == "ones")
    bits.assign((size_t)n, 1);
  else if (pattern == "zeros")
    bits.assign((size_t)n, 0);
  else {
    for (char c : pattern) {
      require(c == '0' || c == '1', Errc::InvalidArgument, "pattern must be bits or ones/zeros");
      bits.push_back(c - '0');
    }
  }
  return bits;
}

CspAlgorithm named_algorithm(const std::string& name) {
  if (name == "constant") {
    return {"constant", true, [](const Instance& inst, uint64_t) {
              Assignment a;
              for (int v = 0; v < inst.num_variables(); ++v)
                a.values.push_back(inst.alphabet_of(v)->enumerate()[0]);
              return a;
            }};
  }
  if (name == "bruteforce") {
    return {"bruteforce", true,
            [](const Instance& inst, uint64_t) { return brute_force_opt(inst).witness; }};
  }
  if (name == "random") {
    return {"random", false, [](const Instance& inst, uint64_t seed) {
              RandomSource rng(seed);
              Assignment a;
              for (int v = 0; v < inst.num_variables(); ++v) {
                auto labels = inst.alphabet_of(v)->enumerate();
                a.values.push_back(labels[(size_t)rng.uniform(labels.size())]);
              }
              return a;
            }};
  }
  fail(Errc::InvalidArgument, "unknown algorithm '" + name + "' (constant|bruteforce|random)");
}

// --- verify subcommand: packaged harness passes ---------------------------

ReductionPass degree_reduce_pass(int d0, uint64_t seed) {
  auto shared = std::make_shared<std::map<std::string, DegreeReduceResult>>();
  ReductionPass pass;
  pass.name = "degree-reduce";
  pass.declared_ci = 1;
  pass.declared_csigma = rat(1, 3);  // 1/d on 3-regular inputs
  pass.transform = [=](const Instance& src) {
    auto res = degree_reduce(src, d0, seed);
    (*shared)[serialize(src)] = res;
    return res.instance;
  };
  pass.lift = [=](const Instance& src, const Instance&, const Assignment& sigma) {
    return degree_reduce_lift(shared->at(serialize(src)).map, sigma);
  };
  pass.recover = [=](const Instance& src, const Instance&, const Assignment& reduced) {
    return recover_degree(shared->at(serialize(src)).map, reduced);
  };
  return pass;
}

ReductionPass expanderize_pass(int d0, uint64_t seed) {
  ReductionPass pass;
  pass.name = "expanderize";
  pass.declared_ci = 1;
  pass.declared_csigma = 1;
  pass.transform = [=](const Instance& src) { return expanderize(src, d0, seed); };
  pass.lift = [](const Instance&, const Instance&, const Assignment& sigma) { return sigma; };
  pass.recover = [](const Instance&, const Instance&, const Assignment& reduced) {
    return recover_expanderize(reduced);
  };
  return pass;
}

NeighborSampler regular_parity_sampler(int n, int d) {
  NeighborSampler s;
  s.sample = [=](RandomSource& rng) {
    return random_regular_planted(n, d, rng.next_u64());
  };
  s.swap_neighbor = [](const Instance& inst, RandomSource& rng) {
    size_t e = (size_t)rng.uniform(inst.num_edges());
    return swap_constraint(inst, e, canonical_swap(*inst.edges()[e].rel));
  };
  return s;
}

json report_of(const ReductionReport& rep) {
  json j;
  j["pass"] = rep.pass;
  j["trials"] = rep.trials;
  j["completeness_ok"] = rep.completeness_ok;
  j["min_lift_value"] = rat_str(rep.min_lift_value);
  j["max_ci_ratio"] = rat_str(rep.max_ci_ratio);
  j["ci_ok"] = rep.ci_ok;
  j["max_csigma_ratio"] = rat_str(rep.max_csigma_ratio);
  j["csigma_ok"] = rep.csigma_ok;
  j["min_recovered_value"] = rat_str(rep.min_recovered_value);
  j["pass_ok"] = rep.passed();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcp-forge: sensitivity-preserving CSP reduction engine"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  uint64_t cap = kDefaultEnumCap;
  std::string format = "json";
  std::string out;
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--cap", cap, "enumeration cap")->capture_default_str();
  app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out, "output file or directory");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  auto* gen_cycle = gen->add_subcommand("e2lin-cycle", "E2LIN cycle");
  int cyc_n = 8;
  std::string cyc_pattern = "ones";
  gen_cycle->add_option("--n", cyc_n, "cycle length (even)")->capture_default_str();
  gen_cycle->add_option("--pattern", cyc_pattern, "ones|zeros|bitstring")->capture_default_str();
  auto* gen_pair = gen->add_subcommand("lemma41", "adversarial cycle pair");
  int pair_n = 8;
  gen_pair->add_option("--n", pair_n, "cycle length (even)")->capture_default_str();
  auto* gen_random = gen->add_subcommand("random", "random binary instance");
  int rnd_n = 8, rnd_m = 12, rnd_sigma = 2;
  std::string rnd_family = "planted";
  gen_random->add_option("--n", rnd_n)->capture_default_str();
  gen_random->add_option("--m", rnd_m)->capture_default_str();
  gen_random->add_option("--sigma", rnd_sigma)->capture_default_str();
  gen_random->add_option("--family", rnd_family, "parity|planted|tuples")->capture_default_str();
  auto* gen_regular = gen->add_subcommand("regular", "random regular planted-parity instance");
  int reg_n = 8, reg_d = 3;
  gen_regular->add_option("--n", reg_n)->capture_default_str();
  gen_regular->add_option("--d", reg_d)->capture_default_str();
  auto* gen_lc = gen->add_subcommand("label-cover", "random satisfiable label cover");
  int lc_nu = 4, lc_nv = 4, lc_m = 6, lc_su = 3, lc_sv = 2;
  gen_lc->add_option("--nu", lc_nu)->capture_default_str();
  gen_lc->add_option("--nv", lc_nv)->capture_default_str();
  gen_lc->add_option("--m", lc_m)->capture_default_str();
  gen_lc->add_option("--sigma-u", lc_su)->capture_default_str();
  gen_lc->add_option("--sigma-v", lc_sv)->capture_default_str();

  // transform
  auto* tr = app.add_subcommand("transform", "apply one reduction pass");
  tr->require_subcommand(1);
  std::string tr_in;
  tr->add_option("--in", tr_in, "input instance file")->required();
  auto* tr_dr = tr->add_subcommand("degree-reduce", "split into expander clouds");
  int dr_d0 = 4;
  tr_dr->add_option("--d0", dr_d0)->capture_default_str();
  auto* tr_ex = tr->add_subcommand("expanderize", "superimpose a trivial expander");
  int ex_d0 = 4;
  tr_ex->add_option("--d0", ex_d0)->capture_default_str();
  auto* tr_pw = tr->add_subcommand("power", "random-walk gap amplification");
  int pw_t = 2;
  std::string pw_mode = "exact";
  uint64_t pw_samples = 100000;
  int pw_maxlen = -1;
  bool pw_materialize = false;
  tr_pw->add_option("--t", pw_t)->capture_default_str();
  tr_pw->add_option("--mode", pw_mode, "exact|sampled")->capture_default_str();
  tr_pw->add_option("--samples", pw_samples)->capture_default_str();
  tr_pw->add_option("--max-len", pw_maxlen, "override B")->capture_default_str();
  tr_pw->add_flag("--materialize", pw_materialize, "normalize weights into multiplicities");
  auto* tr_ar = tr->add_subcommand("alphabet-reduce", "assignment-tester alphabet reduction");
  uint64_t ar_budget = 512;
  tr_ar->add_option("--budget", ar_budget, "sampled-family budget")->capture_default_str();
  auto* tr_sp = tr->add_subcommand("sparsify", "6-ary to binary constraints");
  auto* tr_sr = tr->add_subcommand("serial-repeat", "AND of sampled constraints");
  int sr_t = 2, sr_m = 16;
  tr_sr->add_option("--t", sr_t)->capture_default_str();
  tr_sr->add_option("--reps", sr_m)->capture_default_str();
  auto* tr_sat = tr->add_subcommand("e3sat", "label cover to E3SAT");
  auto* tr_lin = tr->add_subcommand("3lin", "E3SAT to 3LIN (seven-equation gadget)");

  // opt / eval
  auto* opt_cmd = app.add_subcommand("opt", "brute-force optimum");
  std::string opt_in;
  opt_cmd->add_option("--in", opt_in)->required();
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an assignment");
  std::string eval_in, eval_assignment;
  eval_cmd->add_option("--in", eval_in)->required();
  eval_cmd->add_option("--assignment", eval_assignment)->required();

  // sens
  auto* sens_cmd = app.add_subcommand("sens", "sensitivity estimation");
  std::string sens_in, sens_alg = "bruteforce", sens_policy = "delete";
  uint64_t sens_samples = 200;
  sens_cmd->add_option("--in", sens_in)->required();
  sens_cmd->add_option("--algorithm", sens_alg, "constant|bruteforce|random")
      ->capture_default_str();
  sens_cmd->add_option("--policy", sens_policy, "delete|swap")->capture_default_str();
  sens_cmd->add_option("--samples", sens_samples)->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "harness verification of a pass");
  std::string verify_pass;
  uint64_t verify_trials = 50;
  int verify_n = 8, verify_d = 3, verify_d0 = 4;
  verify_cmd->add_option("pass", verify_pass, "degree-reduce|expanderize")->required();
  verify_cmd->add_option("--trials", verify_trials)->capture_default_str();
  verify_cmd->add_option("--n", verify_n)->capture_default_str();
  verify_cmd->add_option("--d", verify_d)->capture_default_str();
  verify_cmd->add_option("--d0", verify_d0)->capture_default_str();

  // pipeline
  auto* pipe_cmd = app.add_subcommand("pipeline", "round-structured end-to-end run");
  std::string pipe_in;
  PipelineConfig pconf;
  std::string pipe_alphabet = "auto";
  pipe_cmd->add_option("--in", pipe_in)->required();
  pipe_cmd->add_option("--rounds", pconf.rounds)->capture_default_str();
  pipe_cmd->add_option("--t", pconf.t)->capture_default_str();
  pipe_cmd->add_option("--d0", pconf.d0)->capture_default_str();
  pipe_cmd->add_option("--alphabet", pipe_alphabet, "auto|require|skip")->capture_default_str();
  std::string pipe_mode = "exact";
  pipe_cmd->add_option("--mode", pipe_mode, "exact|sampled")->capture_default_str();
  pipe_cmd->add_option("--samples", pconf.sample_budget)->capture_default_str();

  // fglss
  auto* fglss_cmd = app.add_subcommand("fglss", "label cover to clique graph");
  std::string fglss_in;
  fglss_cmd->add_option("--in", fglss_in)->required();

  // nonsig
  auto* nonsig_cmd = app.add_subcommand("nonsig", "non-signaling locality sensitivity check");
  std::string nonsig_graph, nonsig_rule = "degree-parity";
  int nonsig_t = 1;
  uint64_t nonsig_samples = 16;
  nonsig_cmd->add_option("--graph", nonsig_graph, "graph text file")->required();
  nonsig_cmd->add_option("--t", nonsig_t)->capture_default_str();
  nonsig_cmd->add_option("--rule", nonsig_rule, "degree-parity|seeded")->capture_default_str();
  nonsig_cmd->add_option("--samples", nonsig_samples)->capture_default_str();

  // report
  auto* report_cmd = app.add_subcommand("report", "summarize a JSON report");
  std::string report_in;
  report_cmd->add_option("--in", report_in)->required();

  // diag
  auto* diag_cmd = app.add_subcommand("diag", "powering walk diagnostics");
  std::string diag_in;
  int diag_t = 4, diag_b = -1;
  uint64_t diag_samples = 100000;
  diag_cmd->add_option("--in", diag_in)->required();
  diag_cmd->add_option("--t", diag_t)->capture_default_str();
  diag_cmd->add_option("--max-len", diag_b)->capture_default_str();
  diag_cmd->add_option("--samples", diag_samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      Instance inst;
      if (*gen_cycle) {
        inst = e2lin_cycle({cyc_n, parse_pattern(cyc_pattern, cyc_n)});
      } else if (*gen_pair) {
        auto [base, tilde] = lemma41_pair(pair_n);
        std::string dir = out.empty() ? "." : out;
        std::filesystem::create_directories(dir);
        write_file(dir + "/lemma41_base.json", serialize(base));
        write_file(dir + "/lemma41_tilde.json", serialize(tilde));
        std::cout << dir << "/lemma41_base.json\n" << dir << "/lemma41_tilde.json\n";
        return 0;
      } else if (*gen_random) {
        RelationFamily fam = rnd_family == "parity" ? RelationFamily::Parity
                             : rnd_family == "tuples" ? RelationFamily::RandomTuples
                                                      : RelationFamily::PlantedSatisfiable;
        inst = random_instance(rnd_n, rnd_m, rnd_sigma, fam, seed);
      } else if (*gen_regular) {
        inst = random_regular_planted(reg_n, reg_d, seed);
      } else {
        inst = random_label_cover(lc_nu, lc_nv, lc_m, lc_su, lc_sv, seed);
      }
      std::string bytes = serialize(inst);
      if (out.empty())
        std::cout << bytes << "\n";
      else
        write_file(out, bytes);
      return 0;
    }

    if (*tr) {
      Instance inst = load_instance(tr_in);
      Instance result;
      json meta = base_report("transform", seed);
      if (*tr_dr) {
        auto res = degree_reduce(inst, dr_d0, seed);
        result = std::move(res.instance);
        meta["pass"] = "degree-reduce";
      } else if (*tr_ex) {
        result = expanderize(inst, ex_d0, seed);
        meta["pass"] = "expanderize";
      } else if (*tr_pw) {
        PowerOptions po;
        po.mode = pw_mode == "sampled" ? PowerOptions::Mode::Sampled : PowerOptions::Mode::Exact;
        po.sample_count = pw_samples;
        po.seed = seed;
        if (pw_maxlen >= 0) po.max_len = pw_maxlen;
        auto res = power(inst, pw_t, po);
        result = pw_materialize ? materialize(res.instance) : std::move(res.instance);
        meta["pass"] = "power";
        meta["B"] = res.max_len;
        meta["truncation_tail"] = rat_str(res.truncation_tail);
      } else if (*tr_ar) {
        TesterOptions topt;
        topt.seed = seed;
        topt.family_budget = ar_budget;
        auto res = alphabet_reduce(inst, topt);
        result = std::move(res.instance);
        meta["pass"] = "alphabet-reduce";
        meta["k"] = res.map.k;
        meta["ell"] = res.map.code.ell;
      } else if (*tr_sp) {
        result = sparsify(inst).instance;
        meta["pass"] = "sparsify";
      } else if (*tr_sr) {
        result = serial_repeat(inst, sr_t, sr_m, seed);
        meta["pass"] = "serial-repeat";
      } else if (*tr_sat) {
        result = to_e3sat(inst).instance;
        meta["pass"] = "e3sat";
      } else {
        (void)tr_lin;
        result = e3sat_to_3lin(inst);
        meta["pass"] = "3lin";
      }
      std::string bytes = serialize(result);
      meta["output_hash"] = content_hash(bytes);
      meta["variables"] = result.num_variables();
      meta["edges"] = result.num_edges();
      if (out.empty()) {
        std::cout << bytes << "\n";
      } else {
        write_file(out, bytes);
        emit(meta, out + ".meta.json", "json");
      }
      return 0;
    }

    if (*opt_cmd) {
      Instance inst = load_instance(opt_in);
      OptResult res = brute_force_opt(inst, cap);
      json j = base_report("opt", seed);
      j["opt"] = rat_str(res.opt);
      j["witness"] = json::parse(serialize_assignment(res.witness));
      emit(j, out, format);
      return 0;
    }

    if (*eval_cmd) {
      Instance inst = load_instance(eval_in);
      Assignment a = deserialize_assignment(read_file(eval_assignment));
      json j = base_report("eval", seed);
      j["value"] = rat_str(value(inst, a));
      j["cost"] = rat_str(cost(inst, a));
      emit(j, out, format);
      return 0;
    }

    if (*sens_cmd) {
      Instance inst = load_instance(sens_in);
      CspAlgorithm alg = named_algorithm(sens_alg);
      NeighborPolicy policy =
          sens_policy == "swap" ? NeighborPolicy::Swap : NeighborPolicy::Delete;
      SensitivityReport rep = estimate_sensitivity(alg, inst, policy, sens_samples, seed);
      json j = base_report("sensitivity", seed);
      j["algorithm"] = rep.algorithm;
      j["policy"] = sens_policy;
      j["samples"] = rep.samples;
      j["max_emd"] = rat_str(rep.max_emd);
      json rows = json::array();
      for (const auto& row : rep.edges) {
        json r;
        r["edge"] = row.edge;
        r["policy"] = sens_policy;
        r["emd_estimate"] = rat_str(row.emd_estimate);
        r["coupling_bound"] = rat_str(row.coupling_bound);
        r["samples"] = row.samples;
        rows.push_back(r);
      }
      j["rows"] = rows;
      emit(j, out, format);
      return 0;
    }

    if (*verify_cmd) {
      NeighborSampler sampler = regular_parity_sampler(verify_n, verify_d);
      ReductionPass pass;
      if (verify_pass == "degree-reduce")
        pass = degree_reduce_pass(verify_d0, derive_seed(seed, "dr"));
      else if (verify_pass == "expanderize")
        pass = expanderize_pass(verify_d0, derive_seed(seed, "ex"));
      else
        fail(Errc::InvalidArgument, "verify supports degree-reduce|expanderize");
      ReductionReport rep = verify_reduction(pass, sampler, verify_trials, seed);
      json j = base_report("verify", seed);
      j["report"] = report_of(rep);
      emit(j, out, format);
      return rep.passed() ? 0 : 1;
    }

    if (*pipe_cmd) {
      Instance inst = load_instance(pipe_in);
      pconf.seed = seed;
      pconf.enum_cap = cap;
      pconf.exact = pipe_mode != "sampled";
      pconf.alphabet_mode = pipe_alphabet == "require"
                                ? PipelineConfig::AlphabetMode::Require
                                : (pipe_alphabet == "skip" ? PipelineConfig::AlphabetMode::Skip
                                                           : PipelineConfig::AlphabetMode::Auto);
      pconf.out_dir = out.empty() ? "pipeline-out" : out;
      PipelineRun run = run_pipeline(pconf, inst);
      bool ok = run.report["witness_value_one_everywhere"].get<bool>();
      std::cout << run.report.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*fglss_cmd) {
      Instance inst = load_instance(fglss_in);
      FglssResult fg = fglss(inst, cap);
      json j = base_report("fglss", seed);
      j["vertices"] = fg.graph.num_vertices();
      j["edges"] = fg.graph.num_edges();
      json legend = json::array();
      for (const auto& v : fg.legend)
        legend.push_back(json{{"edge", v.edge}, {"labels", v.labels}});
      j["legend"] = legend;
      if (!out.empty()) {
        write_file(out, fg.graph.to_text());
        emit(j, out + ".legend.json", "json");
      } else {
        emit(j, "", "json");
      }
      return 0;
    }

    if (*nonsig_cmd) {
      Graph g = Graph::from_text(read_file(nonsig_graph));
      LocalAlgorithm alg;
      alg.locality = nonsig_t;
      if (nonsig_rule == "degree-parity") {
        alg.name = "degree-parity";
        alg.rule = [](const BallView& ball, uint64_t) {
          int deg = 0;
          for (auto [u, v] : ball.edges)
            deg += (u == ball.center) + (v == ball.center);
          return deg % 2 == 0 ? 1 : 0;
        };
      } else {
        alg.name = "seeded";
        alg.rule = [](const BallView& ball, uint64_t s) {
          uint64_t h = derive_seed(s, (uint64_t)ball.center);
          for (auto [u, v] : ball.edges) h = derive_seed(h, (uint64_t)(u * 131071 + v));
          return (int)(h & 1);
        };
      }
      NonsignalReport rep = check_nonsignaling_sensitivity(alg, g, nonsig_samples, seed);
      json j = base_report("nonsig", seed);
      j["locality"] = rep.locality;
      j["max_degree"] = rep.max_degree;
      j["passed"] = rep.passed;
      json rows = json::array();
      for (const auto& row : rep.edges)
        rows.push_back(json{{"edge", row.edge},
                            {"affected", row.affected},
                            {"bound", row.bound},
                            {"coupling_emd", rat_str(row.coupling_emd)}});
      j["rows"] = rows;
      emit(j, out, format);
      return rep.passed ? 0 : 1;
    }

    if (*diag_cmd) {
      Instance inst = load_instance(diag_in);
      OptResult res = brute_force_opt(inst, cap);
      int b = diag_b >= 0 ? diag_b : powering_max_len(diag_t, inst.alphabet_of(0)->size());
      PoweringDiagnostics d =
          powering_diagnostics(inst, res.witness, diag_t, b, diag_samples, seed);
      json j = base_report("diag", seed);
      j["t"] = d.t;
      j["max_len"] = d.max_len;
      j["samples"] = d.samples;
      j["mean_len"] = d.mean_len;
      j["pr_len_gt_b"] = d.pr_len_gt_b;
      j["mean_nstar"] = d.mean_nstar;
      j["pr_nstar_pos"] = d.pr_nstar_pos;
      j["second_moment_ok"] = d.second_moment_ok;
      emit(j, out, format);
      return 0;
    }

    if (*report_cmd) {
      json j = json::parse(read_file(report_in));
      std::cout << "kind: " << j.value("kind", "?") << "\n";
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.value().is_primitive())
          std::cout << "  " << it.key() << ": " << it.value().dump() << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
