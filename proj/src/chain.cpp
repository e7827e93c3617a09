#include "kurlab/chain.hpp"

namespace kurlab {

std::string to_string(Letter l) {
  switch (l.kind) {
    case LetterKind::interior: return "i" + std::to_string(l.index);
    case LetterKind::unit: return "1";
    default: return "k" + std::to_string(l.index);
  }
}

unsigned PointedChain::rank(Letter l) const {
  if (!contains(l)) throw input_error("letter outside chain: " + to_string(l));
  switch (l.kind) {
    case LetterKind::interior: return l.index;
    case LetterKind::unit: return n_neg_;
    default: return n_neg_ + n_pos_ - l.index;
  }
}

Letter PointedChain::letter_at(unsigned rank) const {
  if (rank >= size()) throw input_error("rank out of range");
  if (rank < n_neg_) return Letter::interior(rank);
  if (rank == n_neg_) return Letter::one();
  return Letter::closure(n_neg_ + n_pos_ - rank);
}

std::vector<Letter> PointedChain::letters() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (unsigned r = 0; r < size(); ++r) out.push_back(letter_at(r));
  return out;
}

MorphismCheck validate_morphism(const ChainMorphism& m) {
  if (m.map.size() != m.src.size())
    return {false, "letter map has " + std::to_string(m.map.size()) + " entries, expected " +
                       std::to_string(m.src.size())};
  for (unsigned r = 0; r < m.src.size(); ++r) {
    if (!m.dst.contains(m.map[r]))
      return {false, "image " + to_string(m.map[r]) + " of " + to_string(m.src.letter_at(r)) +
                         " is outside the target chain"};
  }
  Letter unit_image = m.map[m.src.rank(Letter::one())];
  if (!unit_image.is_unit())
    return {false, "unit maps to " + to_string(unit_image)};
  for (unsigned r = 0; r + 1 < m.src.size(); ++r) {
    Letter a = m.src.letter_at(r), b = m.src.letter_at(r + 1);
    if (m.dst.rank(m.map[r]) > m.dst.rank(m.map[r + 1]))
      return {false, to_string(a) + " < " + to_string(b) + " but " + to_string(m.map[r]) +
                         " > " + to_string(m.map[r + 1])};
  }
  return {};
}

bool is_star_morphism(const ChainMorphism& m) {
  if (m.src.negatives() != m.src.positives() || m.dst.negatives() != m.dst.positives())
    return false;
  if (!validate_morphism(m).valid) return false;
  StarChain s(m.src.negatives()), d(m.dst.negatives());
  for (Letter l : m.src.letters())
    if (m.apply(s.star(l)) != d.star(m.apply(l))) return false;
  return true;
}

ChainMorphism identity_morphism(const PointedChain& chain) {
  return {chain, chain, chain.letters()};
}

ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f) {
  if (f.dst != g.src) throw input_error("morphism composition: chains do not match");
  std::vector<Letter> map;
  map.reserve(f.map.size());
  for (Letter l : f.map) map.push_back(g.apply(l));
  return {f.src, g.dst, std::move(map)};
}

namespace {
ChainMorphism collapse22(const PointedChain& dst, std::vector<Letter> images) {
  return {PointedChain(2, 2), dst, std::move(images)};
}
}  // namespace

ChainMorphism collapse_interiors() {
  return collapse22(PointedChain(1, 2), {Letter::interior(0), Letter::interior(0), Letter::one(),
                                         Letter::closure(1), Letter::closure(0)});
}

ChainMorphism collapse_interior_unit() {
  return collapse22(PointedChain(1, 2), {Letter::interior(0), Letter::one(), Letter::one(),
                                         Letter::closure(1), Letter::closure(0)});
}

ChainMorphism collapse_unit_closure() {
  return collapse22(PointedChain(2, 1), {Letter::interior(0), Letter::interior(1), Letter::one(),
                                         Letter::one(), Letter::closure(0)});
}

ChainMorphism collapse_closures() {
  return collapse22(PointedChain(2, 1), {Letter::interior(0), Letter::interior(1), Letter::one(),
                                         Letter::closure(0), Letter::closure(0)});
}

}  // namespace kurlab
