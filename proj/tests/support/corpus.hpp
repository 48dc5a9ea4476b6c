#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pk/engine/verdict.hpp"

namespace pk::testing {

struct CorpusEntry {
  std::string file;
  bool valid = true;
  /// Valid: smallest k at which plain k-induction succeeds; nullopt when no
  /// k works without auxiliary invariants.
  std::optional<unsigned> induct_k;
  /// Invalid: depth of the shortest counterexample (trace length - 1).
  unsigned cex_k = 0;
  bool bool_only = false;
  /// Valid only with path compression, at this k (k-induct mode).
  std::optional<unsigned> compressed_k;
};

const std::vector<CorpusEntry>& corpus();
std::string corpus_path(const CorpusEntry& e);
std::string data_path(const std::string& name);
std::string fixture_path(const std::string& name);

}  // namespace pk::testing
