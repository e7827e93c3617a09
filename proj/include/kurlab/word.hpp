#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kurlab/chain.hpp"

namespace kurlab {

// Nonempty sequence of chain letters; element of the free semigroup over L.
struct Word {
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Letter l : w.letters)
      h = (h ^ (static_cast<std::size_t>(l.kind) * 131 + l.index + 1)) * 0x100000001b3ull;
    return h;
  }
};

// Canonical order: length first, then lexicographic by letter rank.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i)
      if (a.letters[i] != b.letters[i]) return a.letters[i] < b.letters[i];
    return false;
  }
};

// A word with an optional leading complement.
struct FullWord {
  bool complemented = false;
  Word word;

  friend bool operator==(const FullWord&, const FullWord&) = default;
};

std::string to_string(const Word& w);
std::string to_string(const FullWord& w);

// Token syntax: whitespace-separated `i<j>`, `k<j>`, `1`; parse_full_word also
// accepts one leading `c`.  Letters are validated against the chain.
Word parse_word(const PointedChain& chain, std::string_view text);
FullWord parse_full_word(const PointedChain& chain, std::string_view text);

enum class WordFamily : std::uint8_t { single, vmp, vpm, wminus, wplus };

std::string to_string(WordFamily f);

// Family plus the pivot position m of its defining shape (0 for single letters;
// the smallest valid m is reported when several work).
struct WordClass {
  WordFamily family = WordFamily::single;
  unsigned pivot = 0;

  friend bool operator==(const WordClass&, const WordClass&) = default;
};

// Adjacent letters always straddle the unit; length-1 words count as
// alternating, and no alternating word of length >= 2 contains the unit.
bool is_alternating(const Word& w, const PointedChain& chain);

// The structured-word test: single letters, the two V shapes (strictly
// monotone arms around a valley/peak pivot pair) and the two W shapes (a
// repeated extremal letter flanking the pivot).  nullopt when w is not of any
// of these forms.
std::optional<WordClass> classify(const Word& w, const PointedChain& chain);

struct EnumLimits {
  unsigned max_each = 6;  // cap on n_neg and on n_pos
};

// All structured words over the chain, built constructively (pivot letters
// plus the four monotone arm subsequences), in canonical order.
std::vector<Word> enumerate_kuratowski(const PointedChain& chain, const EnumLimits& lim = {});

// The same list doubled with a complement prefix: w and c w for each w.
std::vector<FullWord> enumerate_full(const PointedChain& chain, const EnumLimits& lim = {});

}  // namespace kurlab
