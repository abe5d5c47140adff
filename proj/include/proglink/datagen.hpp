#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "proglink/corpus.hpp"

namespace proglink {

// Synthetic two-sided corpora for the protocol experiments. Both domains
// produce a local table and an external table over different schemas, with a
// known perfect mapping between matched entities. The hard cases mirror real
// catalog pairs: sibling products/sequels that differ only in fine detail,
// partner records that share only a few tokens, distinctive
// external-side tokens (SKUs, catalog numbers) the local side cannot know
// up front, and cross-reference tokens in local descriptions that mislead
// send-everything keyword matching.
struct DatagenOptions {
  std::string domain = "product";  // "product" or "movie"
  std::uint64_t seed = 7;
  // Tables stay around 5k rows a side; the matched slice is kept small enough
  // that a multi-thousand-round run revisits each linked entity several times.
  int matched = 200;
  int local_only = 4800;
  int external_only = 4800;
};

struct GeneratedCorpus {
  DataTable local;
  DataTable external;
  // (local id, external id), local table order.
  std::vector<std::pair<std::string, std::string>> matches;
};

GeneratedCorpus generate_corpus(const DatagenOptions& options);

// Writes local.csv, external.csv, matches.csv into dir (created if needed).
void write_corpus(const GeneratedCorpus& corpus, const std::string& dir);

}  // namespace proglink
