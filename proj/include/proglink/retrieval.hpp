#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "proglink/corpus.hpp"

namespace proglink {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct RankedEntry {
  std::string entity_id;
  double score = 0.0;
};

// Descending score; ties broken by ascending entity id. Zero-score entities
// are never listed.
using RankedList = std::vector<RankedEntry>;

class InvertedIndex {
 public:
  explicit InvertedIndex(const DataTable& table);

  std::size_t doc_count() const { return doc_ids_.size(); }
  double avg_doc_length() const { return avg_doc_length_; }
  std::size_t doc_frequency(std::string_view term) const;
  std::size_t term_frequency(std::string_view term, std::string_view entity_id) const;
  std::size_t doc_length(std::string_view entity_id) const;

  double bm25_score(std::span<const std::string> query_terms,
                    std::string_view entity_id,
                    const Bm25Params& params = {}) const;

  // Top-k by BM25. Deterministic: equal scores fall back to entity id order.
  RankedList answer(std::span<const std::string> query_terms, int k,
                    const Bm25Params& params = {}) const;

  // Ordinals (table order) of documents containing every query term.
  std::vector<std::uint32_t> conjunctive_match(
      std::span<const std::string> query_terms) const;

  const std::string& doc_id(std::uint32_t ordinal) const { return doc_ids_[ordinal]; }
  const std::vector<std::string>& doc_ids() const { return doc_ids_; }

 private:
  struct Posting {
    std::uint32_t doc = 0;
    std::uint32_t tf = 0;
  };

  const Posting* find_posting(std::string_view term, std::string_view entity_id) const;
  double idf(std::size_t df) const;

  std::vector<std::string> doc_ids_;  // ordinal -> id
  std::unordered_map<std::string, std::uint32_t> ordinal_of_;
  std::vector<std::uint32_t> doc_len_;
  double avg_doc_length_ = 0.0;
  std::unordered_map<std::string, std::uint32_t> term_ids_;
  std::vector<std::vector<Posting>> postings_;  // term id -> docs ascending
};

InvertedIndex build_index(const DataTable& table);

}  // namespace proglink
