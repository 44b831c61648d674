#include "pcpforge/pipeline/pipeline.hpp"

#include <filesystem>

#include "pcpforge/csp/serialize.hpp"
#include "pcpforge/graph/spectral.hpp"
#include "pcpforge/oracle/brute_force.hpp"
#include "pcpforge/rng.hpp"
#include "pcpforge/transform/alphabet_reduce.hpp"
#include "pcpforge/transform/degree_reduce.hpp"
#include "pcpforge/transform/expanderize.hpp"
#include "pcpforge/transform/power.hpp"

namespace pcpforge {

using nlohmann::json;

nlohmann::json PipelineConfig::to_json() const {
  json j;
  j["rounds"] = rounds;
  j["t"] = t;
  j["d0"] = d0;
  j["mode"] = exact ? "exact" : "sampled";
  j["sample_budget"] = sample_budget;
  j["seed"] = seed;
  j["enum_cap"] = enum_cap;
  j["materialize_cap"] = materialize_cap;
  j["alphabet_mode"] = alphabet_mode == AlphabetMode::Auto
                           ? "auto"
                           : (alphabet_mode == AlphabetMode::Require ? "require" : "skip");
  return j;
}

namespace {

StageRecord record_stage(const std::string& name, const Instance& inst,
                         const Assignment& witness, const std::string& out_dir,
                         size_t stage_index, bool compute_lambda) {
  StageRecord rec;
  rec.name = name;
  rec.executed = true;
  rec.variables = inst.num_variables();
  rec.edges = (int64_t)inst.num_edges();
  auto deg = inst.regular_degree();
  rec.degree = deg ? *deg : -1;
  for (int v = 0; v < inst.num_variables(); ++v) {
    try {
      rec.max_alphabet = std::max(rec.max_alphabet, inst.alphabet_of(v)->size());
    } catch (const Error&) {
      rec.max_alphabet = 0;  // over enumeration cap; reported as unknown
    }
  }
  if (compute_lambda && inst.is_binary() && inst.is_unweighted() &&
      inst.num_variables() <= kDenseEigenCap) {
    try {
      rec.lambda_value = lambda(constraint_graph(inst)).value;
    } catch (const Error&) {
      rec.lambda_value = -1;
    }
  }
  rec.witness_value = value(inst, witness);
  std::string bytes = serialize(inst);
  rec.instance_hash = content_hash(bytes);
  if (!out_dir.empty()) {
    char fname[64];
    snprintf(fname, sizeof fname, "stage_%02zu_", stage_index);
    std::string path = out_dir + "/" + fname;
    for (char c : name) path += c == '/' ? '_' : c;
    path += ".json";
    write_file(path, bytes);
    rec.instance_file = path;
  }
  return rec;
}

json stage_to_json(const StageRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["executed"] = rec.executed;
  if (!rec.skip_reason.empty()) j["skip_reason"] = rec.skip_reason;
  if (!rec.executed) return j;
  j["variables"] = rec.variables;
  j["edges"] = rec.edges;
  j["degree"] = rec.degree;
  j["max_alphabet"] = rec.max_alphabet;
  if (rec.lambda_value >= 0) j["lambda"] = rec.lambda_value;
  j["hash"] = rec.instance_hash;
  if (!rec.instance_file.empty()) j["file"] = rec.instance_file;
  j["witness_value"] = rat_str(rec.witness_value);
  return j;
}

}  // namespace

PipelineRun run_pipeline(const PipelineConfig& config, const Instance& input) {
  require(config.rounds >= 0, Errc::InvalidArgument, "negative round count");
  if (!config.out_dir.empty()) std::filesystem::create_directories(config.out_dir);

  PipelineRun run;
  Instance cur = input;

  OptResult opt = brute_force_opt(cur, config.enum_cap);
  require(opt.opt == 1, Errc::InvalidArgument, "pipeline input must be satisfiable");
  Assignment witness = opt.witness;

  size_t stage_index = 0;
  run.stages.push_back(
      record_stage("input", cur, witness, config.out_dir, stage_index++, true));

  for (int round = 0; round < config.rounds; ++round) {
    bool final_round = round == config.rounds - 1;
    std::string prefix = "round" + std::to_string(round) + "/";
    uint64_t round_seed = derive_seed(config.seed, (uint64_t)round);

    // expanderize
    cur = expanderize(cur, config.d0, derive_seed(round_seed, "expanderize"));
    run.stages.push_back(
        record_stage(prefix + "expanderize", cur, witness, config.out_dir, stage_index++, true));

    // power + materialize
    PowerOptions popt;
    popt.mode = config.exact ? PowerOptions::Mode::Exact : PowerOptions::Mode::Sampled;
    popt.sample_count = config.sample_budget;
    popt.seed = derive_seed(round_seed, "power");
    PowerResult pw = power(cur, config.t, popt);
    witness = power_lift(pw, witness);
    cur = pw.instance;
    run.stages.push_back(
        record_stage(prefix + "power", cur, witness, config.out_dir, stage_index++, false));
    cur = materialize(cur, config.materialize_cap);
    run.stages.push_back(
        record_stage(prefix + "materialize", cur, witness, config.out_dir, stage_index++, false));

    // degree reduction
    {
      DegreeReduceResult dr = degree_reduce(cur, config.d0, derive_seed(round_seed, "degree1"));
      witness = degree_reduce_lift(dr.map, witness);
      cur = std::move(dr.instance);
      run.stages.push_back(record_stage(prefix + "degree-reduce", cur, witness, config.out_dir,
                                        stage_index++, false));
    }

    // alphabet reduction (+ trailing degree reduction except in the last round)
    bool alphabet_done = false;
    if (config.alphabet_mode == PipelineConfig::AlphabetMode::Skip) {
      StageRecord rec;
      rec.name = prefix + "alphabet-reduce";
      rec.skip_reason = "disabled by config";
      run.stages.push_back(std::move(rec));
    } else {
      try {
        TesterOptions topt;
        topt.seed = derive_seed(round_seed, "tester");
        AlphabetReduceResult ar = alphabet_reduce(cur, topt);
        witness = alphabet_reduce_lift(ar, cur, witness);
        cur = ar.instance;
        alphabet_done = true;
        run.stages.push_back(record_stage(prefix + "alphabet-reduce", cur, witness,
                                          config.out_dir, stage_index++, false));
      } catch (const Error& e) {
        if (e.code() != Errc::TesterTooLarge ||
            config.alphabet_mode == PipelineConfig::AlphabetMode::Require)
          throw;
        StageRecord rec;
        rec.name = prefix + "alphabet-reduce";
        rec.skip_reason = std::string("skipped: ") + e.what();
        run.stages.push_back(std::move(rec));
      }
    }

    if (alphabet_done && !final_round) {
      DegreeReduceResult dr = degree_reduce(cur, config.d0, derive_seed(round_seed, "degree2"));
      witness = degree_reduce_lift(dr.map, witness);
      cur = std::move(dr.instance);
      run.stages.push_back(record_stage(prefix + "degree-reduce-2", cur, witness,
                                        config.out_dir, stage_index++, false));
    } else if (!alphabet_done) {
      StageRecord rec;
      rec.name = prefix + "degree-reduce-2";
      rec.skip_reason = "alphabet reduction did not run";
      run.stages.push_back(std::move(rec));
    } else {
      StageRecord rec;
      rec.name = prefix + "degree-reduce-2";
      rec.skip_reason = "omitted in the final round (label-cover shape)";
      run.stages.push_back(std::move(rec));
    }
  }

  json report;
  report["tool"] = "pcp-forge";
  report["kind"] = "pipeline";
  report["config"] = config.to_json();
  report["input_hash"] = content_hash(serialize(input));
  json stages = json::array();
  for (const auto& s : run.stages) stages.push_back(stage_to_json(s));
  report["stages"] = stages;
  bool witness_ok = true;
  for (const auto& s : run.stages)
    if (s.executed && s.witness_value != 1) witness_ok = false;
  report["witness_value_one_everywhere"] = witness_ok;
  run.report = report;
  run.final_instance = std::move(cur);
  run.final_witness = std::move(witness);

  if (!config.out_dir.empty()) {
    json to_write = report;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    to_write["timestamp"] = buf;  // the one non-deterministic field
    write_file(config.out_dir + "/report.json", to_write.dump(2) + "\n");
  }
  return run;
}

}  // namespace pcpforge
