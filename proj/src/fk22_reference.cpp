#include "kurlab/rewrite.hpp"

// Normal forms over the five-letter chain (2,2) and their images under the
// four collapse morphisms, verified against the computed values.

namespace kurlab {

const std::vector<std::string>& reference_words_22() {
  static const std::vector<std::string> table = {
      "1", "i0", "i1", "k0",
      "k1", "i0 k0", "i0 k1", "i1 k0",
      "i1 k1", "k0 i0", "k0 i1", "k1 i0",
      "k1 i1", "i0 k0 i0", "i0 k0 i1", "i0 k1 i0",
      "i0 k1 i1", "i1 k0 i0", "i1 k0 i1", "i1 k1 i0",
      "i1 k1 i1", "k0 i0 k0", "k0 i0 k1", "k0 i1 k0",
      "k0 i1 k1", "k1 i0 k0", "k1 i0 k1", "k1 i1 k0",
      "k1 i1 k1", "i0 k0 i0 k1", "i0 k0 i1 k1", "i1 k0 i0 k0",
      "i1 k0 i0 k1", "i1 k0 i1 k1", "i1 k1 i0 k0", "i1 k1 i0 k1",
      "k0 i0 k0 i1", "k0 i0 k1 i1", "k1 i0 k0 i0", "k1 i0 k0 i1",
      "k1 i0 k1 i1", "k1 i1 k0 i0", "k1 i1 k0 i1", "i1 k0 i0 k0 i1",
      "i1 k1 i0 k1 i1", "i0 k0 i0 k1 i1", "i1 k1 i0 k0 i0", "i1 k0 i0 k1 i1",
      "i1 k1 i0 k0 i1", "k1 i0 k0 i0 k1", "k1 i1 k0 i1 k1", "k0 i0 k0 i1 k1",
      "k1 i1 k0 i0 k0", "k1 i0 k0 i1 k1", "k1 i1 k0 i0 k1", "i1 k1 i0 k0 i1 k1",
      "i1 k0 i0 k0 i1 k1", "i1 k1 i0 k0 i0 k1", "k1 i1 k0 i0 k1 i1", "k1 i0 k0 i0 k1 i1",
      "k1 i1 k0 i0 k0 i1", "i1 k1 i0 k0 i0 k1 i1", "k1 i1 k0 i0 k0 i1 k1",
  };
  return table;
}

const std::vector<std::pair<std::string, std::string>>& reference_pairs_outer() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"1", "1"},
      {"i0", "i0"},
      {"i0", "i1"},
      {"k0", "k0"},
      {"k1", "k0"},
      {"i0 k0", "i0 k0"},
      {"i0 k1", "i0 k0"},
      {"i0 k0", "i1 k0"},
      {"i0 k1", "i1 k0"},
      {"k0 i0", "k0 i0"},
      {"k0 i0", "k0 i1"},
      {"k1 i0", "k0 i0"},
      {"k1 i0", "k0 i1"},
      {"i0 k0 i0", "i0 k0 i0"},
      {"i0 k0 i0", "i0 k0 i1"},
      {"i0 k1 i0", "i0 k0 i0"},
      {"i0 k1 i0", "i0 k0 i1"},
      {"i0 k0 i0", "i1 k0 i0"},
      {"i0 k0 i0", "i1 k0 i1"},
      {"i0 k1 i0", "i1 k0 i0"},
      {"i0 k1 i0", "i1 k0 i1"},
      {"k0 i0 k0", "k0 i0 k0"},
      {"k0 i0 k1", "k0 i0 k0"},
      {"k0 i0 k0", "k0 i1 k0"},
      {"k0 i0 k1", "k0 i1 k0"},
      {"k1 i0 k0", "k0 i0 k0"},
      {"k1 i0 k1", "k0 i0 k0"},
      {"k1 i0 k0", "k0 i1 k0"},
      {"k1 i0 k1", "k0 i1 k0"},
      {"i0 k0 i0 k1", "i0 k0"},
      {"i0 k0 i0 k1", "i0 k0"},
      {"i0 k0", "i1 k0 i0 k0"},
      {"i0 k0 i0 k1", "i1 k0 i0 k0"},
      {"i0 k0 i0 k1", "i1 k0"},
      {"i0 k0", "i1 k0 i0 k0"},
      {"i0 k1", "i1 k0 i0 k0"},
      {"k0 i0", "k0 i0 k0 i1"},
      {"k0 i0", "k0 i0 k0 i1"},
      {"k1 i0 k0 i0", "k0 i0"},
      {"k1 i0 k0 i0", "k0 i0 k0 i1"},
      {"k1 i0", "k0 i0 k0 i1"},
      {"k1 i0 k0 i0", "k0 i0"},
      {"k1 i0 k0 i0", "k0 i1"},
      {"i0 k0 i0", "i1 k0 i0 k0 i1"},
      {"i0 k1 i0", "i1 k0 i0 k0 i1"},
      {"i0 k0 i0", "i0 k0 i1"},
      {"i0 k0 i0", "i1 k0 i0"},
      {"i0 k0 i0", "i1 k0 i0 k0 i1"},
      {"i0 k0 i0", "i1 k0 i0 k0 i1"},
      {"k1 i0 k0 i0 k1", "k0 i0 k0"},
      {"k1 i0 k0 i0 k1", "k0 i1 k0"},
      {"k0 i0 k1", "k0 i0 k0"},
      {"k1 i0 k0", "k0 i0 k0"},
      {"k1 i0 k0 i0 k1", "k0 i0 k0"},
      {"k1 i0 k0 i0 k1", "k0 i0 k0"},
      {"i0 k0 i0 k1", "i1 k0 i0 k0"},
      {"i0 k0 i0 k1", "i1 k0 i0 k0"},
      {"i0 k0 i0 k1", "i1 k0 i0 k0"},
      {"k1 i0 k0 i0", "k0 i0 k0 i1"},
      {"k1 i0 k0 i0", "k0 i0 k0 i1"},
      {"k1 i0 k0 i0", "k0 i0 k0 i1"},
      {"i0 k0 i0", "i1 k0 i0 k0 i1"},
      {"k1 i0 k0 i0 k1", "k0 i0 k0"},
  };
  return table;
}

const std::vector<std::pair<std::string, std::string>>& reference_pairs_inner() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"1", "1"},
      {"i0", "i0"},
      {"1", "i1"},
      {"k0", "k0"},
      {"k1", "1"},
      {"i0 k0", "i0 k0"},
      {"i0 k1", "i0"},
      {"k0", "i1 k0"},
      {"k1", "i1"},
      {"k0 i0", "k0 i0"},
      {"k0", "k0 i1"},
      {"k1 i0", "i0"},
      {"k1", "i1"},
      {"i0 k0 i0", "i0 k0 i0"},
      {"i0 k0", "i0 k0 i1"},
      {"i0 k1 i0", "i0"},
      {"i0 k1", "i0"},
      {"k0 i0", "i1 k0 i0"},
      {"k0", "i1 k0 i1"},
      {"k1 i0", "i0"},
      {"k1", "i1"},
      {"k0 i0 k0", "k0 i0 k0"},
      {"k0 i0 k1", "k0 i0"},
      {"k0", "k0 i1 k0"},
      {"k0", "k0 i1"},
      {"k1 i0 k0", "i0 k0"},
      {"k1 i0 k1", "i0"},
      {"k1 k0", "i1 k0"},
      {"k1", "i1"},
      {"i0 k0 i0 k1", "i0 k0 i0"},
      {"i0 k0", "i0 k0 i1"},
      {"k0 i0 k0", "i1 k0 i0 k0"},
      {"k0 i0 k1", "i1 k0 i0"},
      {"k0", "i1 k0 i1"},
      {"k1 i0 k0", "i0 k0"},
      {"k1 i0 k1", "i0"},
      {"k0 i0 k0", "k0 i0 k0 i1"},
      {"k0 i0 k1", "k0 i0"},
      {"k1 i0 k0 i0", "i0 k0 i0"},
      {"k1 i0 k0", "i0 k0 i1"},
      {"k1 i0 k1", "i0"},
      {"k0 i0", "i1 k0 i0"},
      {"k0", "i1 k0 i1"},
      {"k0 i0 k0", "i1 k0 i0 k0 i1"},
      {"k1 i0 k1", "i0"},
      {"i0 k0 i0 k1", "i0 k0 i0"},
      {"k1 i0 k0 i0", "i0 k0 i0"},
      {"k0 i0 k1", "i1 k0 i0"},
      {"k1 i0 k0", "i0 k0 i1"},
      {"k1 i0 k0 i0 k1", "i0 k0 i0"},
      {"k0", "i1 k0 i1"},
      {"k0 i0 k0", "k0 i0 k0 i1"},
      {"k0 i0 k0", "i1 k0 i0 k0"},
      {"k1 i0 k0", "i0 k0 i1"},
      {"k0 i0 k1", "i1 k0 i0"},
      {"k1 i0 k0", "i0 k0 i1"},
      {"k0 i0 k0", "i1 k0 i0 k0 i1"},
      {"k1 i0 k0 i0 k1", "i0 k0 i0"},
      {"k0 i0 k1", "i1 k0 i0"},
      {"k1 i0 k0 i0 k1", "i0 k0 i0"},
      {"k0 i0 k0", "i1 k0 i0 k0 i1"},
      {"k1 i0 k0 i0 k1", "i0 k0 i0"},
      {"k0 i0 k0", "i1 k0 i0 k0 i1"},
  };
  return table;
}

}  // namespace kurlab
