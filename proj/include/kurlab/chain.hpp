#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kurlab/errors.hpp"

namespace kurlab {

// Generator letters of a pointed chain.  An interior letter i<j> and a closure
// letter k<j> refer to the j-th topology of a chain tau_0 c tau_1 c ...; the
// unit is the identity operator.  The total order mirrors the operator order
//   i0 < i1 < ... < 1 < ... < k1 < k0
// (a coarser topology has the smaller interior and the larger closure), so
// interiors sort ascending by index and closures descending.
enum class LetterKind : std::uint8_t { interior = 0, unit = 1, closure = 2 };

struct Letter {
  LetterKind kind = LetterKind::unit;
  std::uint8_t index = 0;

  static Letter interior(unsigned j) { return {LetterKind::interior, static_cast<std::uint8_t>(j)}; }
  static Letter closure(unsigned j) { return {LetterKind::closure, static_cast<std::uint8_t>(j)}; }
  static Letter one() { return {LetterKind::unit, 0}; }

  bool is_interior() const { return kind == LetterKind::interior; }
  bool is_unit() const { return kind == LetterKind::unit; }
  bool is_closure() const { return kind == LetterKind::closure; }

  // Chain-independent order key (injective on valid letters).
  int order_key() const {
    switch (kind) {
      case LetterKind::interior: return index;
      case LetterKind::unit: return 0x1000;
      default: return 0x2000 - index;
    }
  }

  friend bool operator==(Letter a, Letter b) { return a.kind == b.kind && a.index == b.index; }
  friend auto operator<=>(Letter a, Letter b) { return a.order_key() <=> b.order_key(); }
};

std::string to_string(Letter l);

// A linearly ordered generator alphabet L- u {1} u L+ with n_neg interior
// letters and n_pos closure letters.  Value object; identified by the sizes.
class PointedChain {
public:
  PointedChain(unsigned n_neg, unsigned n_pos) : n_neg_(n_neg), n_pos_(n_pos) {}

  unsigned negatives() const { return n_neg_; }
  unsigned positives() const { return n_pos_; }
  unsigned size() const { return n_neg_ + 1 + n_pos_; }

  bool contains(Letter l) const {
    switch (l.kind) {
      case LetterKind::interior: return l.index < n_neg_;
      case LetterKind::unit: return l.index == 0;
      default: return l.index < n_pos_;
    }
  }

  // 0-based position in the chain order; letter_at is its inverse.
  unsigned rank(Letter l) const;
  Letter letter_at(unsigned rank) const;
  std::vector<Letter> letters() const;  // ascending

  friend bool operator==(const PointedChain&, const PointedChain&) = default;

private:
  unsigned n_neg_;
  unsigned n_pos_;
};

// Pointed chain with the order-reversing involution i<j> <-> k<j>, 1 <-> 1.
class StarChain {
public:
  explicit StarChain(unsigned n) : base_(n, n) {}

  const PointedChain& base() const { return base_; }
  unsigned degree() const { return base_.negatives(); }

  Letter star(Letter l) const {
    if (!base_.contains(l)) throw input_error("letter outside chain: " + to_string(l));
    if (l.is_interior()) return Letter::closure(l.index);
    if (l.is_closure()) return Letter::interior(l.index);
    return l;
  }

private:
  PointedChain base_;
};

// A total letter map between two pointed chains.
struct ChainMorphism {
  PointedChain src;
  PointedChain dst;
  std::vector<Letter> map;  // indexed by src rank

  Letter apply(Letter l) const {
    if (!src.contains(l)) throw input_error("letter outside source chain: " + to_string(l));
    return map.at(src.rank(l));
  }
};

struct MorphismCheck {
  bool valid = true;
  std::string violation;  // empty when valid; names the first violated pair otherwise
};

// Unit preservation and monotonicity.
MorphismCheck validate_morphism(const ChainMorphism& m);

// Additionally f(l*) = f(l)*; requires both chains square.
bool is_star_morphism(const ChainMorphism& m);

ChainMorphism identity_morphism(const PointedChain& chain);

// (g o f): apply f, then g.
ChainMorphism compose(const ChainMorphism& g, const ChainMorphism& f);

// The four surjective monotone collapses of the five-letter chain (2,2) that
// merge one adjacent pair of generators; together they separate all 63
// elements of the free monoid over (2,2).
ChainMorphism collapse_interiors();      // i0,i1 -> i0   : (2,2)->(1,2)
ChainMorphism collapse_interior_unit();  // i1,1  -> 1    : (2,2)->(1,2)
ChainMorphism collapse_unit_closure();   // 1,k1  -> 1    : (2,2)->(2,1)
ChainMorphism collapse_closures();       // k1,k0 -> k0   : (2,2)->(2,1)

}  // namespace kurlab
