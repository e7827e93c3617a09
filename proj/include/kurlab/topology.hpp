#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kurlab/counting.hpp"
#include "kurlab/errors.hpp"

namespace kurlab {

// Subsets of a small ground set as bitmasks; bit i = i-th ground element.
using SubsetMask = std::uint32_t;

inline constexpr unsigned kDefaultGroundCap = 6;

struct GroundSet {
  unsigned size = 0;
  std::vector<std::string> names;  // one per element

  static GroundSet of_size(unsigned size, unsigned cap = kDefaultGroundCap);
  static GroundSet with_names(std::vector<std::string> names, unsigned cap = kDefaultGroundCap);

  SubsetMask full() const { return (SubsetMask{1} << size) - 1; }
  std::string subset_name(SubsetMask m) const;  // e.g. {x,z}
};

SubsetMask complement_of(SubsetMask m, unsigned ground_size);

// A union- and intersection-closed family containing the empty set and the
// whole ground set, with precomputed interior/closure tables.
class FiniteTopology {
public:
  FiniteTopology() = default;  // empty placeholder; assign before use

  // nullopt when valid; otherwise a report naming the first violation.
  static std::optional<std::string> check(unsigned ground_size,
                                          const std::vector<SubsetMask>& opens);
  static FiniteTopology from_opens(unsigned ground_size, std::vector<SubsetMask> opens);
  static FiniteTopology discrete(unsigned ground_size);
  static FiniteTopology antidiscrete(unsigned ground_size);

  unsigned ground_size() const { return size_; }
  const std::vector<SubsetMask>& opens() const { return opens_; }
  SubsetMask interior(SubsetMask a) const { return interior_[a]; }
  SubsetMask closure(SubsetMask a) const { return closure_[a]; }
  bool coarser_or_equal(const FiniteTopology& finer) const;  // opens subset of finer's

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.size_ == b.size_ && a.opens_ == b.opens_;
  }

private:
  unsigned size_ = 0;
  std::vector<SubsetMask> opens_;  // sorted
  std::vector<SubsetMask> interior_, closure_;
};

// A ground set with a chain of topologies ordered by inclusion.
struct PolySpace {
  GroundSet ground;
  std::vector<FiniteTopology> chain;  // chain[i] coarser-or-equal chain[i+1]

  static PolySpace make(GroundSet ground, std::vector<FiniteTopology> chain);
};

// {"ground": ["x","y"], "topologies": [[[], ["x"], ["x","y"]], ...]}
PolySpace space_from_json(const std::string& text, unsigned ground_cap = kDefaultGroundCap);
std::string space_to_json(const PolySpace& space);

// A total self-map of the powerset as a dense lookup table.
struct SetOperator {
  std::vector<SubsetMask> table;  // 2^ground_size entries

  static SetOperator identity(unsigned ground_size);
  static SetOperator interior_of(const FiniteTopology& t);
  static SetOperator closure_of(const FiniteTopology& t);
  static SetOperator complement(unsigned ground_size);

  SetOperator after(const SetOperator& inner) const;  // this(inner(A))
  SubsetMask operator()(SubsetMask a) const { return table[a]; }
  friend bool operator==(const SetOperator&, const SetOperator&) = default;
};

struct GenerationLimits {
  std::size_t max_size = 20000;
};

// The composition closure of the chain's interior/closure operators (plus
// complement when requested), with a shortest generator word per element.
struct GeneratedMonoid {
  std::vector<SetOperator> elements;    // BFS order; elements[0] is the identity
  std::vector<std::string> witnesses;   // token word per element ("1" for identity)
  bool with_complement = false;
};

GeneratedMonoid generate_monoid(const PolySpace& space, bool with_complement,
                                const GenerationLimits& lim = {});

struct BoundReport {
  std::size_t monoid_size = 0;
  BigInt bound;
  BigInt margin;  // bound - size
  bool holds = false;
  unsigned chain_length = 0;
  bool with_complement = false;
};

// |<generators>| against K(n) (or 2K(n) with complement), n = chain length.
BoundReport verify_upper_bound(const PolySpace& space, bool with_complement,
                               const GenerationLimits& lim = {});

// Every nonempty open of any chain topology has nonempty interior in every other.
bool is_saturated(const PolySpace& space);

struct SaturatedReport {
  std::size_t monoid_size = 0;
  std::size_t bound = 0;  // 1 + 6 * chain length
  bool holds = false;
};

// Requires is_saturated(space); the collapse bound on the generated monoid.
SaturatedReport verify_saturated_bound(const PolySpace& space, const GenerationLimits& lim = {});

// All images of a subset under the generated monoid.
std::vector<SubsetMask> orbit(const PolySpace& space, SubsetMask start, bool with_complement,
                              const GenerationLimits& lim = {});

// Every labeled topology on the ground set (union/intersection-closed family
// containing the empty and full sets).  Exponential; intended for size <= 4.
std::vector<FiniteTopology> enumerate_topologies(unsigned ground_size);

struct IncomparableSearchResult {
  FiniteTopology first, second;  // an incomparable pair
  SubsetMask start = 0;
  std::size_t orbit_size = 0;    // closure-orbit of start under the two closures
  bool exhaustive = false;
  std::uint64_t pairs_examined = 0;
};

// Largest orbit of a start set under the two closure operators over
// incomparable topology pairs; exhaustive for ground_size <= 3, randomized
// sampling within budget otherwise.
IncomparableSearchResult search_incomparable(unsigned ground_size, std::uint64_t budget,
                                             std::uint64_t seed = 1,
                                             unsigned ground_cap = kDefaultGroundCap);

std::string search_result_json(const IncomparableSearchResult& r, const GroundSet& ground);

}  // namespace kurlab
