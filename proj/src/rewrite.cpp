#include "kurlab/rewrite.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "kurlab/counting.hpp"
#include "kurlab/errors.hpp"

namespace kurlab {

namespace {

void require_over_chain(const Word& w, const PointedChain& chain) {
  if (w.letters.empty()) throw input_error("empty word");
  for (Letter l : w.letters)
    if (!chain.contains(l)) throw input_error("letter " + to_string(l) + " outside chain");
}

bool four_block_at(const std::vector<Letter>& x, std::size_t i, bool interior_first) {
  Letter x1 = x[i], x2 = x[i + 1], x3 = x[i + 2], x4 = x[i + 3];
  if (interior_first)
    return x1.is_interior() && x3.is_interior() && x2.is_closure() && x4.is_closure() &&
           !(x3 < x1) && !(x4 < x2);  // x1 <= x3, x2 <= x4
  return x1.is_closure() && x3.is_closure() && x2.is_interior() && x4.is_interior() &&
         !(x1 < x3) && !(x2 < x4);  // x1 >= x3, x2 >= x4
}

}  // namespace

std::vector<RewriteRuleApplication> applicable_rewrites(const Word& w, const PointedChain& chain) {
  require_over_chain(w, chain);
  const auto& x = w.letters;
  std::vector<RewriteRuleApplication> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_unit() && x.size() > 1) out.push_back({RewriteRule::unit_drop, i});
    if (i + 1 < x.size()) {
      if (x[i].is_interior() && x[i + 1].is_interior())
        out.push_back({RewriteRule::merge_interiors, i});
      if (x[i].is_closure() && x[i + 1].is_closure())
        out.push_back({RewriteRule::merge_closures, i});
    }
    if (i + 3 < x.size()) {
      if (four_block_at(x, i, true)) out.push_back({RewriteRule::four_block_int_cl, i});
      if (four_block_at(x, i, false)) out.push_back({RewriteRule::four_block_cl_int, i});
    }
  }
  return out;
}

Word apply_rewrite(const Word& w, const PointedChain& chain, const RewriteRuleApplication& app) {
  require_over_chain(w, chain);
  Word out = w;
  auto& x = out.letters;
  std::size_t i = app.position;
  switch (app.rule) {
    case RewriteRule::unit_drop:
      if (i >= x.size() || !x[i].is_unit() || x.size() == 1)
        throw input_error("unit_drop not applicable");
      x.erase(x.begin() + i);
      break;
    case RewriteRule::merge_interiors:
      if (i + 1 >= x.size() || !x[i].is_interior() || !x[i + 1].is_interior())
        throw input_error("merge_interiors not applicable");
      x[i] = std::min(x[i], x[i + 1]);
      x.erase(x.begin() + i + 1);
      break;
    case RewriteRule::merge_closures:
      if (i + 1 >= x.size() || !x[i].is_closure() || !x[i + 1].is_closure())
        throw input_error("merge_closures not applicable");
      x[i] = std::max(x[i], x[i + 1]);
      x.erase(x.begin() + i + 1);
      break;
    case RewriteRule::four_block_int_cl:
    case RewriteRule::four_block_cl_int: {
      bool interior_first = app.rule == RewriteRule::four_block_int_cl;
      if (i + 3 >= x.size() || !four_block_at(x, i, interior_first))
        throw input_error("four_block not applicable");
      x[i + 1] = x[i + 3];
      x.erase(x.begin() + i + 2, x.begin() + i + 4);
      break;
    }
  }
  return out;
}

Word normalize(const Word& w, const PointedChain& chain) {
  require_over_chain(w, chain);
  std::vector<Letter> x = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    // unit drops and same-sign merges, to exhaustion
    bool merged = true;
    while (merged) {
      merged = false;
      std::size_t i = 0;
      while (i + 1 < x.size()) {
        Letter a = x[i], b = x[i + 1];
        if (!a.is_closure() && !b.is_closure()) {  // both <= unit: keep the min
          x[i] = std::min(a, b);
          x.erase(x.begin() + i + 1);
          merged = true;
          continue;
        }
        if (!a.is_interior() && !b.is_interior()) {  // both >= unit: keep the max
          x[i] = std::max(a, b);
          x.erase(x.begin() + i + 1);
          merged = true;
          continue;
        }
        ++i;
      }
      if (x.size() > 1) {
        auto it = std::remove_if(x.begin(), x.end(), [](Letter l) { return l.is_unit(); });
        if (it != x.end()) {
          x.erase(it, x.end());
          merged = true;
        }
      }
    }
    // leftmost four-block
    for (std::size_t i = 0; i + 3 < x.size(); ++i) {
      if (four_block_at(x, i, true) || four_block_at(x, i, false)) {
        x[i + 1] = x[i + 3];
        x.erase(x.begin() + i + 2, x.begin() + i + 4);
        changed = true;
        break;
      }
    }
  }
  return Word{std::move(x)};
}

Word normalize_random(const Word& w, const PointedChain& chain, std::mt19937& rng) {
  Word cur = w;
  for (;;) {
    auto apps = applicable_rewrites(cur, chain);
    if (apps.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, apps.size() - 1);
    cur = apply_rewrite(cur, chain, apps[pick(rng)]);
  }
}

bool words_equal(const Word& u, const Word& v, const PointedChain& chain) {
  return normalize(u, chain) == normalize(v, chain);
}

Word multiply(const Word& u, const Word& v, const PointedChain& chain) {
  Word cat = u;
  cat.letters.insert(cat.letters.end(), v.letters.begin(), v.letters.end());
  return normalize(cat, chain);
}

FreeKuratowskiMonoid::FreeKuratowskiMonoid(PointedChain chain, FreeMonoidLimits lim)
    : chain_(chain), lim_(lim) {}

FreeKuratowskiMonoid FreeKuratowskiMonoid::build(const PointedChain& chain,
                                                 const FreeMonoidLimits& lim) {
  BigInt expected = kuratowski_number(chain.negatives(), chain.positives());
  if (expected > static_cast<unsigned long>(lim.max_elements))
    throw limit_error("free monoid over (" + std::to_string(chain.negatives()) + "," +
                      std::to_string(chain.positives()) + ") has " + expected.get_str() +
                      " elements, above the cap of " + std::to_string(lim.max_elements));

  FreeKuratowskiMonoid m(chain, lim);
  EnumLimits el{std::max({chain.negatives(), chain.positives(), 6u})};
  m.elems_ = enumerate_kuratowski(chain, el);

  std::unordered_map<Word, std::uint32_t, WordHash> index;
  for (std::size_t i = 0; i < m.elems_.size(); ++i)
    index.emplace(m.elems_[i], static_cast<std::uint32_t>(i));

  const std::size_t K = m.elems_.size();
  m.mult_.resize(K * K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      m.mult_[i * K + j] = index.at(multiply(m.elems_[i], m.elems_[j], chain));
  return m;
}

std::size_t FreeKuratowskiMonoid::index_of(const Word& normal_form) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), normal_form, WordOrder{});
  if (it == elems_.end() || !(*it == normal_form))
    throw input_error("not a normal form of this monoid: " + to_string(normal_form));
  return static_cast<std::size_t>(it - elems_.begin());
}

bool FreeKuratowskiMonoid::all_idempotent() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (product(i, i) != i) return false;
  return true;
}

void FreeKuratowskiMonoid::ensure_order() const {
  if (order_built_) return;
  const std::size_t K = size();
  if (K > lim_.max_order_elements)
    throw limit_error("order construction capped at " + std::to_string(lim_.max_order_elements) +
                      " elements; monoid has " + std::to_string(K));
  const std::size_t stride = (K + 63) / 64;
  leq_bits_.assign(K * stride, 0);
  auto set_bit = [&](std::size_t i, std::size_t j) {
    leq_bits_[i * stride + j / 64] |= 1ull << (j % 64);
  };
  for (std::size_t i = 0; i < K; ++i) set_bit(i, i);

  std::unordered_map<Word, std::uint32_t, WordHash> index;
  for (std::size_t i = 0; i < K; ++i) index.emplace(elems_[i], static_cast<std::uint32_t>(i));

  // one-step relation in normal-form contexts (including the empty context)
  auto letters = chain_.letters();
  std::vector<const Word*> contexts;
  static const Word kEmpty{};
  contexts.push_back(&kEmpty);
  for (const auto& e : elems_) contexts.push_back(&e);
  for (const Word* w1 : contexts)
    for (const Word* w2 : contexts)
      for (std::size_t a = 0; a < letters.size(); ++a)
        for (std::size_t b = a + 1; b < letters.size(); ++b) {
          Word lo = *w1, hi;
          lo.letters.push_back(letters[a]);
          lo.letters.insert(lo.letters.end(), w2->letters.begin(), w2->letters.end());
          hi = *w1;
          hi.letters.push_back(letters[b]);
          hi.letters.insert(hi.letters.end(), w2->letters.begin(), w2->letters.end());
          set_bit(index.at(normalize(lo, chain_)), index.at(normalize(hi, chain_)));
        }

  // transitive closure (row-parallel Warshall over packed rows)
  for (std::size_t k = 0; k < K; ++k) {
    const std::uint64_t* rk = &leq_bits_[k * stride];
    for (std::size_t i = 0; i < K; ++i) {
      if (leq_bits_[i * stride + k / 64] & (1ull << (k % 64))) {
        std::uint64_t* ri = &leq_bits_[i * stride];
        for (std::size_t s = 0; s < stride; ++s) ri[s] |= rk[s];
      }
    }
  }
  // antisymmetry must hold on the quotient
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) {
      bool ij = leq_bits_[i * stride + j / 64] & (1ull << (j % 64));
      bool ji = leq_bits_[j * stride + i / 64] & (1ull << (i % 64));
      if (ij && ji)
        throw internal_error("order not antisymmetric: " + to_string(elems_[i]) + " ~ " +
                             to_string(elems_[j]));
    }
  order_built_ = true;
}

bool FreeKuratowskiMonoid::leq(std::size_t i, std::size_t j) const {
  ensure_order();
  const std::size_t stride = (size() + 63) / 64;
  return leq_bits_[i * stride + j / 64] & (1ull << (j % 64));
}

std::vector<std::pair<std::size_t, std::size_t>> FreeKuratowskiMonoid::order_pairs() const {
  ensure_order();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FreeKuratowskiMonoid::hasse_edges() const {
  ensure_order();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t K = size();
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < K && covering; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) covering = false;
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

std::string FreeKuratowskiMonoid::hasse_dot() const {
  std::ostringstream out;
  out << "digraph kuratowski_order {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < size(); ++i)
    out << "  n" << i << " [label=\"" << to_string(elems_[i]) << "\"];\n";
  for (auto [i, j] : hasse_edges()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string FreeKuratowskiMonoid::to_json() const {
  nlohmann::json j;
  j["chain"] = {{"n_neg", chain_.negatives()}, {"n_pos", chain_.positives()}};
  auto elems = nlohmann::json::array();
  for (const auto& e : elems_) elems.push_back(to_string(e));
  j["elements"] = std::move(elems);
  auto mult = nlohmann::json::array();
  for (std::size_t i = 0; i < size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t k = 0; k < size(); ++k) row.push_back(product(i, k));
    mult.push_back(std::move(row));
  }
  j["mult_table"] = std::move(mult);
  auto pairs = nlohmann::json::array();
  for (auto [a, b] : order_pairs()) pairs.push_back({a, b});
  j["order_pairs"] = std::move(pairs);
  return j.dump();
}

bool check_idempotency(const FreeKuratowskiMonoid& m) { return m.all_idempotent(); }

Word induced_hom(const ChainMorphism& m, const Word& w) {
  auto check = validate_morphism(m);
  if (!check.valid) throw input_error("invalid morphism: " + check.violation);
  Word image;
  image.letters.reserve(w.letters.size());
  for (Letter l : w.letters) image.letters.push_back(m.apply(l));
  return normalize(image, m.dst);
}

QuadrupleReport quadruple_separation_check() {
  PointedChain c22(2, 2);
  auto elems = enumerate_kuratowski(c22);
  auto h_out1 = collapse_interiors(), h_out2 = collapse_closures();
  auto h_in1 = collapse_interior_unit(), h_in2 = collapse_unit_closure();

  QuadrupleReport rep;
  std::set<std::array<std::string, 4>> seen;
  std::unordered_map<Word, std::size_t, WordHash> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos.emplace(elems[i], i);

  const auto& ref_words = reference_words_22();
  const auto& ref_outer = reference_pairs_outer();
  const auto& ref_inner = reference_pairs_inner();
  rep.matches_reference =
      ref_words.size() == elems.size() && ref_outer.size() == elems.size() &&
      ref_inner.size() == elems.size();

  for (std::size_t i = 0; i < ref_words.size(); ++i) {
    Word w = parse_word(c22, ref_words[i]);
    if (pos.find(w) == pos.end()) {
      rep.matches_reference = false;
      continue;
    }
    Word a = induced_hom(h_out1, w), b = induced_hom(h_out2, w);
    Word c = induced_hom(h_in1, w), d = induced_hom(h_in2, w);
    seen.insert({to_string(a), to_string(b), to_string(c), to_string(d)});
    if (rep.matches_reference) {
      bool ok = a == normalize(parse_word(h_out1.dst, ref_outer[i].first), h_out1.dst) &&
                b == normalize(parse_word(h_out2.dst, ref_outer[i].second), h_out2.dst) &&
                c == normalize(parse_word(h_in1.dst, ref_inner[i].first), h_in1.dst) &&
                d == normalize(parse_word(h_in2.dst, ref_inner[i].second), h_in2.dst);
      if (!ok) rep.matches_reference = false;
    }
  }
  rep.quadruple_count = seen.size();
  rep.distinct = seen.size() == elems.size();
  return rep;
}

std::vector<std::vector<Word>> congruence_closure_oracle(const PointedChain& chain,
                                                         unsigned max_len,
                                                         const OracleLimits& lim) {
  if (max_len == 0) throw input_error("max_len must be positive");
  const std::size_t S = chain.size();
  const unsigned full_len = max_len + 2;  // detour slack; see header

  // mixed-radix indexing of all words of length 1..full_len
  std::vector<std::size_t> offset(full_len + 2, 0);
  std::size_t total = 0, pow = 1;
  for (unsigned len = 1; len <= full_len; ++len) {
    pow *= S;
    offset[len] = total;
    total += pow;
    if (total > lim.max_words)
      throw limit_error("congruence oracle universe exceeds " + std::to_string(lim.max_words) +
                        " words");
  }
  auto word_index = [&](const std::vector<unsigned>& ranks) {
    std::size_t ix = 0;
    for (unsigned r : ranks) ix = ix * S + r;
    return offset[ranks.size()] + ix;
  };

  // union-find
  std::vector<std::size_t> parent(total);
  for (std::size_t i = 0; i < total; ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };

  // generating pairs of the congruence, over letter ranks
  const unsigned unit = chain.negatives();
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> pairs;
  for (unsigned x = 0; x < S; ++x) {
    pairs.push_back({{x}, {x, unit}});
    pairs.push_back({{x}, {unit, x}});
    pairs.push_back({{x}, {x, x}});
  }
  for (unsigned x1 = 0; x1 <= unit; ++x1)
    for (unsigned x2 = x1; x2 <= unit; ++x2)
      for (unsigned y1 = unit; y1 < S; ++y1)
        for (unsigned y2 = y1; y2 < S; ++y2) {
          pairs.push_back({{x1, y1, x2, y2}, {x1, y2}});
          pairs.push_back({{y2, x2, y1, x1}, {y2, x1}});
        }

  // close: for every word of the universe, every pair occurrence, both directions
  std::vector<unsigned> w, w2;
  for (unsigned len = 1; len <= full_len; ++len) {
    w.assign(len, 0);
    for (;;) {
      std::size_t wi = word_index(w);
      for (const auto& [alpha, beta] : pairs) {
        for (int dir = 0; dir < 2; ++dir) {
          const auto& from = dir ? beta : alpha;
          const auto& to = dir ? alpha : beta;
          if (from.size() > len || len - from.size() + to.size() > full_len) continue;
          for (std::size_t posn = 0; posn + from.size() <= len; ++posn) {
            if (!std::equal(from.begin(), from.end(), w.begin() + posn)) continue;
            w2.clear();
            w2.insert(w2.end(), w.begin(), w.begin() + posn);
            w2.insert(w2.end(), to.begin(), to.end());
            w2.insert(w2.end(), w.begin() + posn + from.size(), w.end());
            unite(wi, word_index(w2));
          }
        }
      }
      // next word of the same length
      int carry = static_cast<int>(len) - 1;
      while (carry >= 0 && ++w[carry] == S) w[carry--] = 0;
      if (carry < 0) break;
    }
  }

  // collect classes restricted to the window
  std::map<std::size_t, std::vector<Word>> classes;
  for (unsigned len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    for (;;) {
      Word ww;
      for (unsigned r : w) ww.letters.push_back(chain.letter_at(r));
      classes[find(word_index(w))].push_back(std::move(ww));
      int carry = static_cast<int>(len) - 1;
      while (carry >= 0 && ++w[carry] == S) w[carry--] = 0;
      if (carry < 0) break;
    }
  }
  std::vector<std::vector<Word>> out;
  out.reserve(classes.size());
  for (auto& [root, cls] : classes) {
    std::sort(cls.begin(), cls.end(), WordOrder{});
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return WordOrder{}(a.front(), b.front()); });
  return out;
}

}  // namespace kurlab
