#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kurlab/chain.hpp"
#include "kurlab/word.hpp"

namespace kurlab {

// Length-reducing rewrite rules.  unit_drop deletes a unit letter;
// the merges replace an adjacent same-sign pair by its min (interiors) or max
// (closures); the four-block rules replace x1 x2 x3 x4 by x1 x4 when the outer
// letters dominate the inner ones sign-wise (x1,x3 interiors, x2,x4 closures,
// x1 <= x3, x2 <= x4 -- or the mirrored form).
enum class RewriteRule : std::uint8_t {
  unit_drop,
  merge_interiors,
  merge_closures,
  four_block_int_cl,
  four_block_cl_int,
};

struct RewriteRuleApplication {
  RewriteRule rule;
  std::size_t position;
};

// Every rule application available on w, in scan order.
std::vector<RewriteRuleApplication> applicable_rewrites(const Word& w, const PointedChain& chain);
Word apply_rewrite(const Word& w, const PointedChain& chain, const RewriteRuleApplication& app);

// Deterministic strategy: unit drops and merges to exhaustion, then the
// leftmost four-block, repeated to a fixpoint.  The result is always a
// structured (classifiable) word; strategy independence is a tested property,
// not an assumption.
Word normalize(const Word& w, const PointedChain& chain);

// Same fixpoint reached by uniformly random rule choices (for the
// strategy-independence checks).
Word normalize_random(const Word& w, const PointedChain& chain, std::mt19937& rng);

bool words_equal(const Word& u, const Word& v, const PointedChain& chain);

// normalize(u v); the monoid operation on normal forms.
Word multiply(const Word& u, const Word& v, const PointedChain& chain);

struct FreeMonoidLimits {
  std::size_t max_elements = 10000;
  std::size_t max_order_elements = 1000;  // order/Hasse construction cap
};

// The quotient of the free semigroup over the chain by the unit, idempotence
// and four-block relations, together with its compatible partial order.
class FreeKuratowskiMonoid {
public:
  static FreeKuratowskiMonoid build(const PointedChain& chain, const FreeMonoidLimits& lim = {});

  const PointedChain& chain() const { return chain_; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Word>& elements() const { return elems_; }
  const Word& element(std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const Word& normal_form) const;

  std::size_t product(std::size_t i, std::size_t j) const { return mult_[i * size() + j]; }
  bool all_idempotent() const;

  // Partial order: reflexive-transitive closure of one-step letter
  // replacements in normal-form contexts.  Built on first use.
  bool leq(std::size_t i, std::size_t j) const;
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs() const;       // i < j, sorted
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;       // covering pairs
  std::string hasse_dot() const;
  std::string to_json() const;  // {chain, elements, mult_table, order_pairs}

private:
  FreeKuratowskiMonoid(PointedChain chain, FreeMonoidLimits lim);
  void ensure_order() const;

  PointedChain chain_;
  FreeMonoidLimits lim_;
  std::vector<Word> elems_;
  std::vector<std::uint32_t> mult_;
  mutable std::vector<std::uint64_t> leq_bits_;  // size() rows of packed bits
  mutable bool order_built_ = false;
};

bool check_idempotency(const FreeKuratowskiMonoid& m);

// Letter-wise image under a validated morphism, then normalize in the target.
Word induced_hom(const ChainMorphism& m, const Word& w);

// Frozen reference data for the five-letter chain (2,2): its 63 normal forms
// and their image pairs under the four collapse morphisms.
const std::vector<std::string>& reference_words_22();
// (collapse_interiors image, collapse_closures image) per reference word.
const std::vector<std::pair<std::string, std::string>>& reference_pairs_outer();
// (collapse_interior_unit image, collapse_unit_closure image) per reference word.
const std::vector<std::pair<std::string, std::string>>& reference_pairs_inner();

struct QuadrupleReport {
  bool distinct = false;
  std::size_t quadruple_count = 0;
  bool matches_reference = false;
};

// Images of all 63 elements of the free monoid over (2,2) under the four
// collapse morphisms: the quadruples must be pairwise distinct and must agree
// (up to normalization) with the frozen reference pairs.
QuadrupleReport quadruple_separation_check();

struct OracleLimits {
  std::size_t max_words = 4'000'000;
};

// Independent equality decider: the smallest congruence containing the unit,
// idempotence and four-block generating pairs, closed exhaustively over all
// words of length <= max_len + 2 (the slack admits the unit-insertion detours
// that same-sign merges of distinct letters require), then restricted to words
// of length <= max_len.  Classes are canonically sorted.
std::vector<std::vector<Word>> congruence_closure_oracle(const PointedChain& chain,
                                                         unsigned max_len,
                                                         const OracleLimits& lim = {});

}  // namespace kurlab
