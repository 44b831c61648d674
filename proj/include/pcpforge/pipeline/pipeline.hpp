#ifndef PCPFORGE_PIPELINE_PIPELINE_HPP
#define PCPFORGE_PIPELINE_PIPELINE_HPP

#include <string>

#include "json.hpp"
#include "pcpforge/csp/instance.hpp"

namespace pcpforge {

struct PipelineConfig {
  int rounds = 1;
  int t = 1;                 // powering horizon
  int d0 = 4;                // expander degree (cloud parity needs it even here)
  bool exact = true;         // Exact vs Sampled powering
  uint64_t sample_budget = 100'000;
  uint64_t seed = 0;
  uint64_t enum_cap = kDefaultEnumCap;
  uint64_t materialize_cap = 2'000'000;
  std::string out_dir;

  // The assignment-tester tables are exponential in k = |X| + |C|; on the
  // ball alphabets produced by powering, k exceeds any workable cap. Auto
  // runs the stage when it fits and records a skip otherwise.
  enum class AlphabetMode { Auto, Require, Skip };
  AlphabetMode alphabet_mode = AlphabetMode::Auto;

  nlohmann::json to_json() const;
};

struct StageRecord {
  std::string name;
  bool executed = false;
  std::string skip_reason;
  int64_t variables = 0;
  int64_t edges = 0;
  int64_t degree = -1;         // -1 when irregular/unknown
  uint64_t max_alphabet = 0;
  double lambda_value = -1;    // -1 when not computed
  std::string instance_hash;
  std::string instance_file;
  Rational witness_value;      // completeness witness value at this stage
};

struct PipelineRun {
  std::vector<StageRecord> stages;
  nlohmann::json report;  // deterministic apart from the "timestamp" field
  Instance final_instance;
  Assignment final_witness;
};

// Theorem-style round structure: per round expanderize, power (+materialize),
// degree-reduce, alphabet-reduce, degree-reduce; the final round omits the
// trailing degree reduction. Every stage output is written to out_dir.
PipelineRun run_pipeline(const PipelineConfig& config, const Instance& input);

}  // namespace pcpforge

#endif
