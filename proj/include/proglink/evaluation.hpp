#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proglink/corpus.hpp"
#include "proglink/protocol.hpp"
#include "proglink/retrieval.hpp"
#include "proglink/strategy.hpp"

namespace proglink {

// Reciprocal rank of the first relevant entry; 0 when none is listed.
double mrr(const RankedList& ranked, const std::vector<std::string>& relevant);

// Oracle feedback backed by the ground-truth mapping.
class SimulatedUser {
 public:
  explicit SimulatedUser(const GroundTruth* truth) : truth_(truth) {}

  // 1-based positions of relevant entries in the ranked list, ascending.
  std::vector<int> judge(const Intent& intent, const std::string& source_id,
                         const RankedList& ranked) const;

  const std::vector<std::string>& relevant_set(const std::string& local_entity_id,
                                               const std::string& source_id) const;

  std::size_t judge_calls() const { return judge_calls_; }

 private:
  const GroundTruth* truth_;
  mutable std::size_t judge_calls_ = 0;
};

struct MethodVariant {
  std::string name;
  LocalPolicy policy = LocalPolicy::kRothErev;
  bool external_learning = false;
  bool autonomous = false;
  bool expansion = false;

  static const std::vector<MethodVariant>& all();
  static const MethodVariant* find(std::string_view name);
};

struct CurvePoint {
  std::string variant;
  std::uint64_t seed = 0;
  long round = 0;
  double mrr_avg = 0.0;  // moving average over the trailing window
};

struct WorkloadConfig {
  int min_query_terms = 1;
  int max_query_terms = 3;
  int match_cap = 3;        // extend the query while more locals than this match
  int max_extended_terms = 6;
};

struct ExperimentDatasets {
  const DataTable* local = nullptr;
  const InvertedIndex* local_index = nullptr;
  std::vector<const DataTable*> externals;
  std::vector<const InvertedIndex*> external_indexes;
  const GroundTruth* truth = nullptr;
};

struct CellSpec {
  MethodVariant variant;
  std::uint64_t seed = 1;
  long rounds = 0;
  int window = 100;
  LearnerConfig learner;
  SessionConfig session;
  Bm25Params bm25;
  WorkloadConfig workload;
  std::vector<long> snapshot_rounds;
};

struct CellStats {
  std::size_t local_rows = 0;
  std::size_t local_cells = 0;
  std::size_t external_rows = 0;
  std::size_t external_cells = 0;
  long replays_total = 0;
  std::size_t judge_calls = 0;
};

struct CellOutput {
  std::vector<CurvePoint> curve;  // one point per round
  std::string interaction_log;    // one line per round
  std::vector<std::pair<std::string, std::string>> snapshots;  // name, content
  CellStats stats;
};

// Runs one (variant, seed) cell: per round the simulated user picks a target
// local entity (uniform over entities with a ground-truth partner), issues its
// cached keyword query, and judges the results. The workload stream depends
// only on the seed, so every variant of a seed sees the same queries.
CellOutput run_experiment(const ExperimentDatasets& data, const CellSpec& spec);

}  // namespace proglink
