#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "proglink/corpus.hpp"
#include "proglink/retrieval.hpp"
#include "proglink/rng.hpp"
#include "proglink/strategy.hpp"

namespace proglink {

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One queried data source on the answering side. Learning sources keep a
// strategy matrix over (query key -> entity); non-learning sources answer
// with plain BM25 forever.
class ExternalSource {
 public:
  ExternalSource(const DataTable* table, const InvertedIndex* index, bool learns)
      : table_(table), index_(index), learns_(learns) {}

  const std::string& id() const { return table_->source_id; }
  const DataTable& table() const { return *table_; }
  const InvertedIndex& index() const { return *index_; }
  bool learns() const { return learns_; }
  StrategyMatrix& matrix() { return matrix_; }
  const StrategyMatrix& matrix() const { return matrix_; }

 private:
  const DataTable* table_;
  const InvertedIndex* index_;
  bool learns_;
  StrategyMatrix matrix_;
};

// Outcome of one (intent, source) exchange within an interaction.
struct IntentResult {
  Intent intent;
  std::string source_id;
  std::vector<std::string> sent_feature_keys;  // empty for the all-keywords policy
  std::vector<std::string> sent_terms;
  std::string sent_query_key;
  RankedList returned;
  // Filled by apply_feedback.
  std::vector<int> relevant_positions;         // ascending, 1-based
  std::vector<std::string> relevant_returned;  // ids at those positions
  double mrr = 0.0;
};

struct InteractionRecord {
  long round = 0;
  std::string user_query;
  std::vector<Intent> intents;
  std::vector<IntentResult> results;  // intent-major, source order within
  double round_mrr = 0.0;             // mean over results once feedback applied
  int replays_run = 0;
};

struct SessionConfig {
  int min_interactions_before_auto = 1;
  int auto_max_rounds = 10;
  bool expansion_enabled = false;
  bool auto_enabled = false;
};

// One protocol run: a local table whose learners phrase queries, and external
// sources that answer them. Owns all mutable strategy state.
class Session {
 public:
  Session(const DataTable* local, const InvertedIndex* local_index,
          std::vector<ExternalSource*> externals, const LearnerConfig& learner,
          const SessionConfig& session, const Bm25Params& bm25, RandomSource* rng);

  // Local entities matching every query token, in table order. Empty query
  // or no matches: no intents.
  std::vector<Intent> form_intents(const std::string& user_query) const;

  // Runs the full exchange for one user query and bumps the round counter.
  InteractionRecord run_interaction(const std::string& user_query);

  // relevant_sets[i] holds the relevant entity ids for record.results[i].
  // Computes positions and MRR, then applies one reinforcement step per the
  // active policy. The all-keywords policy mutates nothing.
  void apply_feedback(InteractionRecord& record,
                      const std::vector<std::vector<std::string>>& relevant_sets);

  // Re-runs the recorded user query against the stored relevance until the
  // average MRR stops improving or auto_max_rounds is hit. Returns the number
  // of replays executed. Never consults anything outside the record.
  int autonomous_replay(const InteractionRecord& record,
                        const std::vector<std::vector<std::string>>& relevant_sets);

  long rounds_run() const { return round_; }
  const LocalLearner& learner_for(std::string_view source_id) const;
  LocalLearner& learner_for(std::string_view source_id);
  const std::vector<ExternalSource*>& externals() const { return externals_; }
  const DataTable& local_table() const { return *local_; }

 private:
  InteractionRecord perform(const std::string& user_query);
  void run_intent(const Intent& intent, ExternalSource& src, IntentResult& out);

  const DataTable* local_;
  const InvertedIndex* local_index_;
  std::vector<ExternalSource*> externals_;
  std::vector<std::unique_ptr<LocalLearner>> learners_;  // parallel to externals_
  LearnerConfig lc_;
  SessionConfig sc_;
  Bm25Params bm25_;
  RandomSource* rng_;
  long round_ = 0;
};

// Line form used in the interaction log: round, user query, and per intent
// the sent query, returned ids, relevant ids, and MRR.
std::string format_interaction(const InteractionRecord& record);

}  // namespace proglink
