#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace proglink {

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lowercased keyword tokens. Splits on Unicode whitespace and ASCII
// punctuation, so "7/11" yields ["7", "11"]. Non-ASCII letters pass through
// untouched.
std::vector<std::string> tokenize(std::string_view text);

// An n-gram drawn from one attribute value (attribute_prefix set) or from the
// user's query text (attribute_prefix empty).
struct Feature {
  std::string attribute_prefix;
  std::vector<std::string> tokens;

  bool operator==(const Feature&) const = default;

  // Stable string form: "prefix:tok tok" or "tok tok". Tokens cannot contain
  // ':' or spaces, so keys are collision-free.
  std::string key() const;
};

struct EntityRecord {
  std::string source_id;
  std::string entity_id;
  // Attribute order follows the table schema.
  std::vector<std::pair<std::string, std::string>> attributes;
};

struct DataTable {
  std::string source_id;
  std::vector<std::string> schema;  // value column names, file order
  std::vector<EntityRecord> records;
  std::unordered_map<std::string, std::size_t> by_id;

  const EntityRecord* find(std::string_view entity_id) const;
};

// All contiguous n-grams (1..n_max) of every attribute value, prefixed with
// the attribute name. Duplicates are kept; callers dedupe by key when they
// need a set.
std::vector<Feature> extract_features(const EntityRecord& record, int n_max);

// Same n-gram expansion over raw query text, with no attribute prefix.
std::vector<Feature> query_features(std::string_view query_text, int n_max);

struct TableFormat {
  std::string source_id;
  std::string id_column;
  std::vector<std::string> value_columns;
};

struct LoadStats {
  std::size_t rows_in_file = 0;     // data rows, header excluded
  std::size_t records_loaded = 0;
  std::size_t dropped_empty = 0;    // rows whose values tokenize to nothing
};

// CSV loader (RFC-style quoting: quoted fields, doubled quotes, embedded
// commas and newlines, CRLF). Throws CorpusError on unreadable files, missing
// columns, duplicate or unusable entity ids.
DataTable load_table(const std::string& path, const TableFormat& format,
                     LoadStats* stats = nullptr);

struct GroundTruth {
  struct Pair {
    std::string local_id;
    std::string external_source;
    std::string external_id;
  };

  std::vector<Pair> pairs;  // deduplicated, file order

  // nullptr when the local entity has no partner in that source.
  const std::vector<std::string>* partners(std::string_view local_id,
                                           std::string_view source_id) const;
  bool has_partner(std::string_view local_id) const;

  std::unordered_map<std::string,
                     std::unordered_map<std::string, std::vector<std::string>>>
      by_local;
};

struct GroundTruthStats {
  std::size_t rows_in_file = 0;
  std::size_t pairs_loaded = 0;
  std::size_t dropped_unknown = 0;  // ids or sources not present in the tables
};

// Accepts two-column (local_id, external_id) files when exactly one external
// table is given, or three-column (local_id, source, external_id) files.
// Rows naming unknown ids are dropped and counted, not fatal.
GroundTruth load_ground_truth(const std::string& path, const DataTable& local,
                              const std::vector<const DataTable*>& externals,
                              GroundTruthStats* stats = nullptr);

// Shared CSV core, exposed for the generator's writers and for tests.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace proglink
