#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "proglink/config.hpp"
#include "proglink/evaluation.hpp"

namespace proglink {

struct RunOptions {
  int jobs = 1;
  std::string out_dir_override;   // empty: use config
  bool seed_override = false;
  std::uint64_t seed_value = 0;
};

// Loads the datasets, runs every (variant, seed) cell, and writes out_dir/
// curves.csv, interactions.log, manifest.txt and strategies/*.tsv. Cells may
// run on a thread pool (jobs > 1); outputs are collected in config order so
// the bytes never depend on scheduling.
void cmd_run(const ExperimentConfig& config, const RunOptions& options,
             std::ostream& diag);

// Pretty-prints one context row of a snapshot file: actions with strength and
// normalized probability, highest probability first. Throws on an unknown
// context key.
std::string cmd_inspect(const std::string& snapshot_path, const std::string& context_key);

}  // namespace proglink
