#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "proglink/corpus.hpp"
#include "proglink/retrieval.hpp"
#include "proglink/rng.hpp"

namespace proglink {

struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LocalPolicy { kRothErev, kUcb1, kSendAllBm25 };

const char* policy_name(LocalPolicy p);

struct LearnerConfig {
  double alpha = 1.0;
  int k_results = 20;
  int m_terms = 3;
  int n_max = 2;
  LocalPolicy policy = LocalPolicy::kRothErev;
  double ucb_c = 1.4142135623730951;  // sqrt(2)
  double init_boost = 2.0;
  std::uint64_t rng_seed = 1;
};

// One (user query, local entity) pair. query_key is the canonical form of the
// query: distinct tokens, sorted, space-joined.
struct Intent {
  std::string query_key;
  std::string entity_id;

  bool operator==(const Intent&) const = default;

  std::string row_key() const { return query_key + '|' + entity_id; }
  static std::string canonical_key(std::vector<std::string> tokens);
  static Intent from_query(std::string_view query_text, std::string entity_id);
};

// Sparse map of context -> (action -> accumulated strength S >= 0). Actions
// are interned once per matrix; rows keep insertion order so sampling is
// independent of hash-map iteration order.
class StrategyMatrix {
 public:
  using ActionId = std::uint32_t;

  struct Row {
    std::vector<ActionId> actions;
    std::vector<double> weights;
    std::unordered_map<ActionId, std::uint32_t> position;
    double total = 0.0;
  };

  bool has_row(std::string_view context) const;
  const Row* find_row(std::string_view context) const;

  // Creates the row on first use. Returns false if the cell already existed
  // (weight left untouched).
  bool add_cell(const std::string& context, const std::string& action, double weight);

  // Eq-style update: S += alpha * reward. Throws StrategyError for unknown
  // context or action. reward 0 leaves the matrix unchanged.
  void reinforce(std::string_view context, std::string_view action,
                 double reward, double alpha);

  // (action key, S) in insertion order.
  std::vector<std::pair<std::string, double>> row_cells(std::string_view context) const;
  // (action key, L) with a freshly computed total, in insertion order.
  std::vector<std::pair<std::string, double>> row_probabilities(std::string_view context) const;

  std::size_t row_count() const { return rows_.size(); }
  std::size_t cell_count() const { return cell_count_; }

  const std::string& action_key(ActionId id) const { return action_keys_[id]; }

  // One "context\taction\tS" line per cell, sorted, S printed with %.17g so
  // a snapshot round-trips exactly.
  void export_snapshot(std::ostream& out) const;

  // Draw up to m distinct actions of a row; each draw is categorical over the
  // remaining weights. Zero-weight actions are never drawn. Returns positions
  // into row.actions, in draw order.
  static std::vector<std::uint32_t> sample_distinct(const Row& row, int m,
                                                    RandomSource& rng);

 private:
  ActionId intern(const std::string& action);

  std::unordered_map<std::string, Row> rows_;
  std::vector<std::string> action_keys_;
  std::unordered_map<std::string, ActionId> action_ids_;
  std::size_t cell_count_ = 0;
};

// Token lists behind feature action keys, needed to flatten sampled features
// into a keyword query. Filled by the init/expand ops, queried at sample time.
class FeatureCatalog {
 public:
  void add(const Feature& f);
  const std::vector<std::string>* tokens(std::string_view key) const;
  std::size_t size() const { return by_key_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> by_key_;
};

// Local learner state toward one external source: a strategy matrix over
// (intent row -> feature), the catalog resolving those features, and UCB
// counters when that policy is active.
struct UcbState {
  struct Arm {
    std::uint64_t pulls = 0;
    double reward_sum = 0.0;
  };
  struct Context {
    std::uint64_t total_pulls = 0;
    std::unordered_map<std::string, Arm> arms;
  };
  std::unordered_map<std::string, Context> contexts;

  void record(const std::string& context, const std::string& action, double reward);
};

struct LocalLearner {
  StrategyMatrix matrix;
  FeatureCatalog catalog;
  UcbState ucb;
};

// Populates the row for a fresh intent: every entity feature and every query
// feature (n-grams up to n_max), deduplicated by key, each at init_boost.
// Query features come from the canonical query key, so the result depends
// only on (intent, entity, config).
void init_local_row(LocalLearner& learner, const Intent& intent,
                    const EntityRecord& entity, const LearnerConfig& config);

// Adds the external entity's features to an existing intent row at weight 1.0,
// skipping keys already present.
void expand_row(LocalLearner& learner, const Intent& intent,
                const EntityRecord& external_entity, const LearnerConfig& config);

struct SampledQuery {
  std::vector<std::string> feature_keys;  // drawn actions, draw order
  std::vector<std::string> terms;         // flattened distinct tokens
  std::string query_key;                  // canonical form of terms
};

// Draws up to m_terms features from the intent's row and flattens them into
// a keyword query.
SampledQuery sample_external_query(const LocalLearner& learner, const Intent& intent,
                                   int m_terms, RandomSource& rng);

// Creates the external row for a query key on first sight: seeded with BM25
// scores of the top k results, or a uniform random sample of min(k, doc_count)
// entities when BM25 matches nothing. Returns the row, or nullptr for an
// empty corpus.
const StrategyMatrix::Row* ensure_external_row(StrategyMatrix& matrix,
                                               const std::string& query_key,
                                               const InvertedIndex& index,
                                               const LearnerConfig& config,
                                               const Bm25Params& params,
                                               RandomSource& rng);

// Samples up to k_results distinct entities from the row's distribution.
// Scores are 1/rank placeholders (sampled lists carry no BM25 score).
RankedList sample_external_answers(const StrategyMatrix& matrix,
                                   std::string_view query_key, int k_results,
                                   RandomSource& rng);

// UCB-1 over the candidate actions: any unpulled candidate first, then argmax
// of mean + ucb_c * sqrt(ln(total_pulls) / pulls). All ties resolve to the
// earliest candidate in caller order, which for row actions is extraction
// order.
std::string ucb1_select(const UcbState& state, std::string_view context,
                        std::vector<std::string> candidates, double ucb_c);

}  // namespace proglink
