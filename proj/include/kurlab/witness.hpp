#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kurlab/chain.hpp"
#include "kurlab/topology.hpp"
#include "kurlab/word.hpp"

namespace kurlab {

// A 2- or 3-point space with a comparable topology pair, a monotone star
// assignment of the chain letters to its operators, and a test set on which
// two given full words evaluate differently.  Interior letters map to one of
// {coarse interior, fine interior, identity} by two order thresholds; closure
// letters follow by the involution.
struct WitnessComponent {
  FiniteTopology coarse, fine;
  std::vector<std::uint8_t> assign;  // per interior letter: 0=coarse, 1=fine, 2=identity
  SubsetMask test_set = 0;
  std::string case_label;

  unsigned ground_size() const { return coarse.ground_size(); }
};

// Dispatch labels, by the comparison that selects the component:
//   c-right / c-left / c-both    complement flags differ or are both set
//   tail-unit-pos, tail-neg-unit, tail-neg-pos   distinct last letters across the unit
//   tail-neg-neg / tail-pos-pos  distinct last letters of equal sign
//   desc-*   first divergent letter sits below its 2-step successor
//            (-outer/-inner by the dominating closure's partner, -equal/-below
//             by the next closure letter of the longer word)
//   flat-*   otherwise; needs the 3-point spaces (-outer/-inner as above)
// A "+dual" suffix marks the star-reduction applied when the letter before the
// divergence is an interior.
WitnessComponent separating_component(const FullWord& u, const FullWord& v, const StarChain& L);

// Independent second route: exhaustive search over the catalog of 2-/3-point
// components, all threshold assignments and all test sets.
WitnessComponent exhaustive_separating_component(const FullWord& u, const FullWord& v,
                                                 const StarChain& L);

// Image of the component's test set under the word (complement applied last).
SubsetMask eval_on_component(const FullWord& w, const WitnessComponent& comp, const StarChain& L);

struct WitnessLimits {
  unsigned max_degree = 3;              // cap on the chain degree n
  std::size_t max_components = 100000;  // cap for materialized witness spaces
};

// One verified separating component per ordered pair of distinct full words.
class WitnessSpace {
public:
  static WitnessSpace build(const StarChain& L, const WitnessLimits& lim = {});

  const StarChain& chain() const { return chain_; }
  const std::vector<FullWord>& words() const { return words_; }
  // Component for the ordered pair (words()[u], words()[v]), u != v.
  const WitnessComponent& component(std::size_t u, std::size_t v) const;
  std::size_t component_count() const { return components_.size(); }

private:
  explicit WitnessSpace(const StarChain& L) : chain_(L) {}
  StarChain chain_;
  std::vector<FullWord> words_;
  std::vector<WitnessComponent> components_;  // row-major over ordered pairs, diagonal skipped
};

struct CertifyReport {
  unsigned degree = 0;
  std::size_t kuratowski_count = 0;
  std::size_t full_count = 0;
  std::uint64_t pairs_checked = 0;
  std::map<std::string, std::uint64_t> case_histogram;
};

// Lazily builds and self-verifies a separating component for every ordered
// pair of distinct full words over the degree-n star chain; the two counts
// are then exactly the numbers of pairwise-distinct words.
CertifyReport certify_exactness(unsigned n, const WitnessLimits& lim = {});

std::string certify_report_json(const CertifyReport& rep);

// The component as a loadable space JSON, with the assignment and test set.
std::string component_space_json(const WitnessComponent& comp);

}  // namespace kurlab
