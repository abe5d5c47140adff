#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "proglink/corpus.hpp"
#include "proglink/evaluation.hpp"
#include "proglink/retrieval.hpp"
#include "proglink/strategy.hpp"

namespace proglink {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceConfig {
  std::string source_id;
  std::string path;
  std::string id_column = "id";
  std::vector<std::string> value_columns;
};

struct ExperimentConfig {
  SourceConfig local;
  std::vector<SourceConfig> externals;
  std::string ground_truth_path;
  std::vector<std::string> variants;
  long rounds = 2000;
  std::vector<std::uint64_t> seeds = {1};
  int window = 100;
  std::string out_dir = "out";
  std::vector<long> snapshot_rounds = {100, 500, 1000, 2000};
  LearnerConfig learner;
  SessionConfig session;
  Bm25Params bm25;
  WorkloadConfig workload;
};

// Parses and validates a line-oriented key=value config with [section]
// headers. '#' and ';' start full-line comments. Unknown sections, unknown
// keys, unknown variant names, missing files, and non-positive numerics are
// all ConfigErrors naming the offender.
ExperimentConfig validate_config(const std::string& path);

// The parsed config in canonical key=value order, used by the run manifest.
std::string render_config(const ExperimentConfig& config);

}  // namespace proglink
