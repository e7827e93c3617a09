#include "kurlab/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kurlab {

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w.letters[i]);
  }
  return out;
}

std::string to_string(const FullWord& w) {
  return w.complemented ? "c " + to_string(w.word) : to_string(w.word);
}

namespace {

Letter parse_letter(const PointedChain& chain, std::string_view tok) {
  if (tok == "1") return Letter::one();
  if ((tok[0] == 'i' || tok[0] == 'k') && tok.size() > 1) {
    unsigned j = 0;
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), j);
    if (ec == std::errc() && p == tok.data() + tok.size()) {
      Letter l = tok[0] == 'i' ? Letter::interior(j) : Letter::closure(j);
      if (!chain.contains(l))
        throw input_error("letter " + std::string(tok) + " outside chain (" +
                          std::to_string(chain.negatives()) + "," +
                          std::to_string(chain.positives()) + ")");
      return l;
    }
  }
  throw input_error("bad token: " + std::string(tok));
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) toks.push_back(text.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Word parse_word(const PointedChain& chain, std::string_view text) {
  auto toks = split_tokens(text);
  if (toks.empty()) throw input_error("empty word");
  Word w;
  w.letters.reserve(toks.size());
  for (auto t : toks) {
    if (t == "c") throw input_error("complement token not allowed in a plain word");
    w.letters.push_back(parse_letter(chain, t));
  }
  return w;
}

FullWord parse_full_word(const PointedChain& chain, std::string_view text) {
  auto toks = split_tokens(text);
  if (toks.empty()) throw input_error("empty word");
  FullWord fw;
  std::size_t start = 0;
  if (toks[0] == "c") {
    fw.complemented = true;
    start = 1;
    if (toks.size() == 1) throw input_error("complement with no word");
  }
  for (std::size_t i = start; i < toks.size(); ++i) {
    if (toks[i] == "c") throw input_error("complement allowed only as a leading token");
    fw.word.letters.push_back(parse_letter(chain, toks[i]));
  }
  return fw;
}

std::string to_string(WordFamily f) {
  switch (f) {
    case WordFamily::single: return "single";
    case WordFamily::vmp: return "vmp";
    case WordFamily::vpm: return "vpm";
    case WordFamily::wminus: return "wminus";
    default: return "wplus";
  }
}

namespace {

void require_over_chain(const Word& w, const PointedChain& chain) {
  if (w.letters.empty()) throw input_error("empty word");
  for (Letter l : w.letters)
    if (!chain.contains(l)) throw input_error("letter " + to_string(l) + " outside chain");
}

}  // namespace

bool is_alternating(const Word& w, const PointedChain& chain) {
  require_over_chain(w, chain);
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
    Letter a = w.letters[i], b = w.letters[i + 1];
    bool ok = (a.is_interior() && b.is_closure()) || (a.is_closure() && b.is_interior());
    if (!ok) return false;
  }
  return true;
}

std::optional<WordClass> classify(const Word& w, const PointedChain& chain) {
  if (!is_alternating(w, chain)) return std::nullopt;
  const auto& x = w.letters;
  const int N = static_cast<int>(x.size()) - 1;
  if (N == 0) return WordClass{WordFamily::single, 0};

  // One arm of a shape: letters at start, start+dir*2, ... (count of them),
  // all of one sign and strictly monotone.
  auto arm = [&](int start, int dir, int count, bool negative, bool increasing) {
    Letter prev;
    for (int i = 0; i < count; ++i) {
      Letter cur = x[start + dir * 2 * i];
      if (negative ? !cur.is_interior() : !cur.is_closure()) return false;
      if (i > 0 && (increasing ? !(prev < cur) : !(cur < prev))) return false;
      prev = cur;
    }
    return true;
  };

  for (int m = 0; m < N; ++m) {  // valley of interiors at m, peak of closures at m+1
    if (arm(m, +1, (N - m) / 2 + 1, true, true) && arm(m, -1, m / 2 + 1, true, true) &&
        arm(m + 1, +1, (N - m - 1) / 2 + 1, false, false) &&
        arm(m + 1, -1, (m + 1) / 2 + 1, false, false))
      return WordClass{WordFamily::vmp, static_cast<unsigned>(m)};
  }
  for (int m = 0; m < N; ++m) {  // peak of closures at m, valley of interiors at m+1
    if (arm(m, +1, (N - m) / 2 + 1, false, false) && arm(m, -1, m / 2 + 1, false, false) &&
        arm(m + 1, +1, (N - m - 1) / 2 + 1, true, true) &&
        arm(m + 1, -1, (m + 1) / 2 + 1, true, true))
      return WordClass{WordFamily::vpm, static_cast<unsigned>(m)};
  }
  for (int m = 1; m < N; ++m) {  // repeated interior letter flanking a closure peak
    if (!(x[m - 1].is_interior() && x[m - 1] == x[m + 1])) continue;
    if (arm(m + 1, +1, (N - m - 1) / 2 + 1, true, true) &&
        arm(m - 1, -1, (m - 1) / 2 + 1, true, true) &&
        arm(m, +1, (N - m) / 2 + 1, false, false) && arm(m, -1, m / 2 + 1, false, false))
      return WordClass{WordFamily::wminus, static_cast<unsigned>(m)};
  }
  for (int m = 1; m < N; ++m) {  // repeated closure letter flanking an interior valley
    if (!(x[m - 1].is_closure() && x[m - 1] == x[m + 1])) continue;
    if (arm(m + 1, +1, (N - m - 1) / 2 + 1, false, false) &&
        arm(m - 1, -1, (m - 1) / 2 + 1, false, false) &&
        arm(m, +1, (N - m) / 2 + 1, true, true) && arm(m, -1, m / 2 + 1, true, true))
      return WordClass{WordFamily::wplus, static_cast<unsigned>(m)};
  }
  return std::nullopt;
}

namespace {

// Subsets of `pool` (ascending letters) grouped by size.
std::vector<std::vector<std::vector<Letter>>> subsets_by_size(const std::vector<Letter>& pool) {
  std::vector<std::vector<std::vector<Letter>>> out(pool.size() + 1);
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<Letter> sub;
    for (unsigned b = 0; b < pool.size(); ++b)
      if (mask & (1u << b)) sub.push_back(pool[b]);
    out[sub.size()].push_back(std::move(sub));
  }
  return out;
}

// Merge two arm sequences, nearest-to-core first: a[0], b[0], a[1], b[1], ...
// |a| must be |b| or |b|+1.
std::vector<Letter> interleave(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size() + b.size(); ++i)
    out.push_back(i % 2 == 0 ? a[i / 2] : b[i / 2]);
  return out;
}

std::vector<Letter> reversed(std::vector<Letter> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<Letter> descending(std::vector<Letter> v) {
  std::reverse(v.begin(), v.end());
  return v;  // pools are ascending, so reversing gives descending
}

}  // namespace

std::vector<Word> enumerate_kuratowski(const PointedChain& chain, const EnumLimits& lim) {
  if (chain.negatives() > lim.max_each || chain.positives() > lim.max_each)
    throw limit_error("chain (" + std::to_string(chain.negatives()) + "," +
                      std::to_string(chain.positives()) + ") exceeds the enumeration cap of " +
                      std::to_string(lim.max_each) + " per side");

  std::vector<Letter> negs, poss;
  for (unsigned j = 0; j < chain.negatives(); ++j) negs.push_back(Letter::interior(j));
  std::sort(negs.begin(), negs.end());
  for (unsigned j = 0; j < chain.positives(); ++j) poss.push_back(Letter::closure(j));
  std::sort(poss.begin(), poss.end());

  std::vector<Word> words;
  for (Letter l : chain.letters()) words.push_back(Word{{l}});

  auto emit = [&](std::vector<Letter> left, std::initializer_list<Letter> core,
                  const std::vector<Letter>& right) {
    Word w;
    w.letters = reversed(std::move(left));
    w.letters.insert(w.letters.end(), core.begin(), core.end());
    w.letters.insert(w.letters.end(), right.begin(), right.end());
    words.push_back(std::move(w));
  };

  for (Letter nu : negs) {
    std::vector<Letter> above;  // interiors strictly above the valley letter
    for (Letter l : negs)
      if (nu < l) above.push_back(l);
    auto asub = subsets_by_size(above);
    for (Letter pi : poss) {
      std::vector<Letter> below;  // closures strictly below the peak letter
      for (Letter l : poss)
        if (l < pi) below.push_back(l);
      auto bsub = subsets_by_size(below);
      auto bsizes = [&](std::size_t lo, std::size_t hi) {
        std::vector<std::size_t> out;
        for (std::size_t s = lo; s <= hi && s < bsub.size(); ++s)
          if (s >= lo) out.push_back(s);
        return out;
      };

      // valley nu then peak pi: left arms (closure, interior), right (interior, closure)
      for (std::size_t l = 0; l < asub.size(); ++l)
        for (const auto& Al : asub[l])
          for (std::size_t lb : bsizes(l, l + 1))
            for (const auto& Bl : bsub[lb])
              for (std::size_t r = 0; r < asub.size(); ++r)
                for (const auto& Ar : asub[r])
                  for (std::size_t rb : bsizes(r == 0 ? 0 : r - 1, r))
                    for (const auto& Br : bsub[rb])
                      emit(interleave(descending(Bl), Al), {nu, pi},
                           interleave(Ar, descending(Br)));

      // peak pi then valley nu: left arms (interior, closure), right (closure, interior)
      for (std::size_t l = 0; l < asub.size(); ++l)
        for (const auto& Nl : asub[l])
          for (std::size_t lb : bsizes(l == 0 ? 0 : l - 1, l))
            for (const auto& Pl : bsub[lb])
              for (std::size_t r = 0; r < asub.size(); ++r)
                for (const auto& Nr : asub[r])
                  for (std::size_t rb : bsizes(r, r + 1))
                    for (const auto& Pr : bsub[rb])
                      emit(interleave(Nl, descending(Pl)), {pi, nu},
                           interleave(descending(Pr), Nr));

      // repeated peak: pi nu pi core, interior-first arms on both sides
      for (std::size_t l = 0; l < asub.size(); ++l)
        for (const auto& Al : asub[l])
          for (std::size_t lb : bsizes(l == 0 ? 0 : l - 1, l))
            for (const auto& Bl : bsub[lb])
              for (std::size_t r = 0; r < asub.size(); ++r)
                for (const auto& Ar : asub[r])
                  for (std::size_t rb : bsizes(r == 0 ? 0 : r - 1, r))
                    for (const auto& Br : bsub[rb])
                      emit(interleave(Al, descending(Bl)), {pi, nu, pi},
                           interleave(Ar, descending(Br)));

      // repeated valley: nu pi nu core, closure-first arms on both sides
      for (std::size_t l = 0; l < asub.size(); ++l)
        for (const auto& Nl : asub[l])
          for (std::size_t lb : bsizes(l, l + 1))
            for (const auto& Pl : bsub[lb])
              for (std::size_t r = 0; r < asub.size(); ++r)
                for (const auto& Nr : asub[r])
                  for (std::size_t rb : bsizes(r, r + 1))
                    for (const auto& Pr : bsub[rb])
                      emit(interleave(descending(Pl), Nl), {nu, pi, nu},
                           interleave(descending(Pr), Nr));
    }
  }

  std::sort(words.begin(), words.end(), WordOrder{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

std::vector<FullWord> enumerate_full(const PointedChain& chain, const EnumLimits& lim) {
  auto base = enumerate_kuratowski(chain, lim);
  std::vector<FullWord> out;
  out.reserve(2 * base.size());
  for (const auto& w : base) out.push_back({false, w});
  for (const auto& w : base) out.push_back({true, w});
  return out;
}

}  // namespace kurlab
