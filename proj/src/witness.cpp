#include "kurlab/witness.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "kurlab/counting.hpp"
#include "kurlab/errors.hpp"
#include "kurlab/word.hpp"

namespace kurlab {

namespace {

// catalog spaces: {x,y} with x=bit0, y=bit1; {x,y,z} with z=bit2
const FiniteTopology& tau_anti2() {
  static const FiniteTopology t = FiniteTopology::antidiscrete(2);
  return t;
}
const FiniteTopology& tau_disc2() {
  static const FiniteTopology t = FiniteTopology::discrete(2);
  return t;
}
const FiniteTopology& tau_x() {
  static const FiniteTopology t = FiniteTopology::from_opens(2, {0b00, 0b01, 0b11});
  return t;
}
const FiniteTopology& tau_y() {
  static const FiniteTopology t = FiniteTopology::from_opens(2, {0b00, 0b10, 0b11});
  return t;
}
const FiniteTopology& tau_xz() {
  static const FiniteTopology t = FiniteTopology::from_opens(3, {0b000, 0b001, 0b100, 0b101, 0b111});
  return t;
}
const FiniteTopology& tau_xz_yz() {
  static const FiniteTopology t =
      FiniteTopology::from_opens(3, {0b000, 0b001, 0b100, 0b101, 0b110, 0b111});
  return t;
}
const FiniteTopology& tau_xz_xy() {
  static const FiniteTopology t =
      FiniteTopology::from_opens(3, {0b000, 0b001, 0b011, 0b100, 0b101, 0b111});
  return t;
}

// letter at distance i from the right end; out-of-range positions read as units
Letter at(const Word& w, int i) {
  if (i < 0 || i >= static_cast<int>(w.letters.size())) return Letter::one();
  return w.letters[w.letters.size() - 1 - static_cast<std::size_t>(i)];
}

Word star_word(const Word& w, const StarChain& L) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (Letter l : w.letters) out.letters.push_back(L.star(l));
  return out;
}

WitnessComponent make_component(const FiniteTopology& coarse, const FiniteTopology& fine,
                                std::vector<std::uint8_t> assign, SubsetMask test_set,
                                std::string label) {
  return WitnessComponent{coarse, fine, std::move(assign), test_set, std::move(label)};
}

// thresholds are inclusive letter bounds; interiors sort by index
std::vector<std::uint8_t> threshold_assign(unsigned n, Letter first_upto, Letter second_upto) {
  std::vector<std::uint8_t> assign(n, 2);
  for (unsigned j = 0; j < n; ++j) {
    Letter l = Letter::interior(j);
    if (!(first_upto < l))
      assign[j] = 0;
    else if (!(second_upto < l))
      assign[j] = 1;
  }
  return assign;
}

WitnessComponent dualized(WitnessComponent inner, const char* label_head) {
  inner.test_set = complement_of(inner.test_set, inner.ground_size());
  inner.case_label = label_head ? std::string(label_head) : inner.case_label + "+dual";
  return inner;
}

WitnessComponent dispatch(const FullWord& u, const FullWord& v, const StarChain& L);

WitnessComponent dispatch_plain(const Word& u0w, const Word& v0w, const StarChain& L) {
  const unsigned n = L.degree();
  const Word* uw = &u0w;
  const Word* vw = &v0w;
  Letter u0 = at(*uw, 0), v0 = at(*vw, 0);

  if (u0 != v0) {
    if (v0 < u0) {
      std::swap(uw, vw);
      std::swap(u0, v0);
    }
    // now u0 < v0
    if (u0.is_unit() && v0.is_closure())
      return make_component(tau_anti2(), tau_disc2(), std::vector<std::uint8_t>(n, 0), 0b01,
                            "tail-unit-pos");
    if (u0.is_interior() && v0.is_unit())
      return make_component(tau_anti2(), tau_disc2(), std::vector<std::uint8_t>(n, 0), 0b01,
                            "tail-neg-unit");
    if (u0.is_interior() && v0.is_closure())
      return make_component(tau_anti2(), tau_disc2(), std::vector<std::uint8_t>(n, 0), 0b01,
                            "tail-neg-pos");
    if (u0.is_interior() && v0.is_interior()) {
      // split the interiors at u0: coarse below, fine above
      std::vector<std::uint8_t> assign(n, 1);
      for (unsigned j = 0; j < n; ++j)
        if (!(u0 < Letter::interior(j))) assign[j] = 0;
      return make_component(tau_anti2(), tau_x(), std::move(assign), 0b01, "tail-neg-neg");
    }
    // both closures: reduce through the involution
    WitnessComponent inner = dispatch_plain(star_word(*uw, L), star_word(*vw, L), L);
    return dualized(std::move(inner), "tail-pos-pos");
  }

  // equal last letters; find the first divergence from the right
  int k = 0;
  while (at(*uw, k) == at(*vw, k)) ++k;
  if (k < 1) throw internal_error("divergence scan failed");

  if (at(*uw, k - 1).is_interior()) {
    // the letter before the divergence is an interior: work with the duals
    WitnessComponent inner = dispatch_plain(star_word(*uw, L), star_word(*vw, L), L);
    return dualized(std::move(inner), nullptr);
  }
  if (!at(*uw, k - 1).is_closure())
    throw internal_error("expected a closure before the divergence");

  if (at(*vw, k) < at(*uw, k)) std::swap(uw, vw);
  Letter uk = at(*uw, k), vk = at(*vw, k);
  if (!uk.is_interior()) throw internal_error("divergent letter is not an interior");

  if (uk < at(*uw, k - 2)) {
    // interiors still descending toward the divergence
    Letter next_cl = at(*vw, k + 1);
    Letter straddle = at(*vw, k - 1);
    if (next_cl.is_closure() && straddle < next_cl) {
      Letter partner = L.star(next_cl);
      if (!(uk < partner)) {  // partner <= uk
        return make_component(tau_anti2(), tau_y(), threshold_assign(n, partner, uk), 0b01,
                              "desc-outer");
      }
      return make_component(tau_anti2(), tau_x(), threshold_assign(n, uk, partner), 0b01,
                            "desc-inner");
    }
    // all interiors up to uk use the fine interior, the rest the identity
    std::vector<std::uint8_t> assign(n, 2);
    for (unsigned j = 0; j < n; ++j)
      if (!(uk < Letter::interior(j))) assign[j] = 1;
    return make_component(tau_anti2(), tau_y(), std::move(assign),
                          0b01, next_cl == straddle ? "desc-equal" : "desc-below");
  }

  // flat divergence: the 3-point spaces
  Letter partner = L.star(at(*uw, k - 1));
  if (!(uk < partner)) {  // partner <= uk
    return make_component(tau_xz(), tau_xz_yz(), threshold_assign(n, partner, uk), 0b001,
                          "flat-outer");
  }
  return make_component(tau_xz(), tau_xz_xy(), threshold_assign(n, uk, partner), 0b001,
                        "flat-inner");
}

WitnessComponent dispatch(const FullWord& u, const FullWord& v, const StarChain& L) {
  const unsigned n = L.degree();
  if (!u.complemented && v.complemented)
    return make_component(tau_anti2(), tau_disc2(), std::vector<std::uint8_t>(n, 2), 0b01,
                          "c-right");
  if (u.complemented && !v.complemented)
    return make_component(tau_anti2(), tau_disc2(), std::vector<std::uint8_t>(n, 2), 0b01,
                          "c-left");
  if (u.complemented && v.complemented) {
    WitnessComponent inner = dispatch({false, u.word}, {false, v.word}, L);
    inner.case_label = "c-both";
    return inner;
  }
  return dispatch_plain(u.word, v.word, L);
}

}  // namespace

SubsetMask eval_on_component(const FullWord& w, const WitnessComponent& comp, const StarChain& L) {
  SubsetMask cur = comp.test_set;
  for (auto it = w.word.letters.rbegin(); it != w.word.letters.rend(); ++it) {
    Letter l = *it;
    if (!L.base().contains(l)) throw input_error("letter " + to_string(l) + " outside chain");
    if (l.is_unit()) continue;
    unsigned j = l.index;
    std::uint8_t a = comp.assign.at(j);
    if (a == 2) continue;
    const FiniteTopology& t = a == 0 ? comp.coarse : comp.fine;
    cur = l.is_interior() ? t.interior(cur) : t.closure(cur);
  }
  if (w.complemented) cur = complement_of(cur, comp.ground_size());
  return cur;
}

WitnessComponent exhaustive_separating_component(const FullWord& u, const FullWord& v,
                                                 const StarChain& L) {
  if (u == v) throw input_error("identical words cannot be separated");
  const unsigned n = L.degree();
  std::vector<std::pair<const FiniteTopology*, const FiniteTopology*>> chains = {
      {&tau_anti2(), &tau_disc2()}, {&tau_anti2(), &tau_x()},    {&tau_anti2(), &tau_y()},
      {&tau_x(), &tau_disc2()},     {&tau_y(), &tau_disc2()},    {&tau_anti2(), &tau_anti2()},
      {&tau_xz(), &tau_xz_yz()},    {&tau_xz(), &tau_xz_xy()},
  };
  for (auto [coarse, fine] : chains) {
    const SubsetMask full = (SubsetMask{1} << coarse->ground_size()) - 1;
    for (unsigned t1 = 0; t1 <= n; ++t1)
      for (unsigned t2 = t1; t2 <= n; ++t2) {
        std::vector<std::uint8_t> assign(n, 2);
        for (unsigned j = 0; j < n; ++j) assign[j] = j < t1 ? 0 : (j < t2 ? 1 : 2);
        WitnessComponent comp = make_component(*coarse, *fine, std::move(assign), 0, "searched");
        for (SubsetMask a = 0; a <= full; ++a) {
          comp.test_set = a;
          if (eval_on_component(u, comp, L) != eval_on_component(v, comp, L)) return comp;
          if (a == full) break;
        }
      }
  }
  throw internal_error("no separating component exists for " + to_string(u) + " vs " +
                       to_string(v));
}

WitnessComponent separating_component(const FullWord& u, const FullWord& v, const StarChain& L) {
  if (u == v) throw input_error("identical words cannot be separated");
  WitnessComponent comp = dispatch(u, v, L);
  // every component is verified by evaluation before being accepted
  if (eval_on_component(u, comp, L) == eval_on_component(v, comp, L)) {
    std::fprintf(stderr,
                 "kurlab: witness dispatch '%s' failed to separate \"%s\" vs \"%s\"; "
                 "falling back to exhaustive search\n",
                 comp.case_label.c_str(), to_string(u).c_str(), to_string(v).c_str());
    WitnessComponent found = exhaustive_separating_component(u, v, L);
    found.case_label = comp.case_label + "+fallback";
    return found;
  }
  return comp;
}

WitnessSpace WitnessSpace::build(const StarChain& L, const WitnessLimits& lim) {
  WitnessSpace out(L);
  auto words = enumerate_full(L.base());
  const std::size_t W = words.size();
  if (W * (W - 1) > lim.max_components)
    throw limit_error("witness space needs " + std::to_string(W * (W - 1)) +
                      " components, above the cap of " + std::to_string(lim.max_components));
  out.words_ = std::move(words);
  out.components_.reserve(W * (W - 1));
  for (std::size_t i = 0; i < W; ++i)
    for (std::size_t j = 0; j < W; ++j)
      if (i != j) out.components_.push_back(separating_component(out.words_[i], out.words_[j], L));
  return out;
}

const WitnessComponent& WitnessSpace::component(std::size_t u, std::size_t v) const {
  const std::size_t W = words_.size();
  if (u >= W || v >= W || u == v) throw input_error("bad component pair index");
  return components_[u * (W - 1) + (v < u ? v : v - 1)];
}

CertifyReport certify_exactness(unsigned n, const WitnessLimits& lim) {
  if (n > lim.max_degree)
    throw limit_error("certification capped at degree " + std::to_string(lim.max_degree));
  StarChain L(n);
  auto words = enumerate_full(L.base());
  CertifyReport rep;
  rep.degree = n;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      WitnessComponent comp = separating_component(words[i], words[j], L);
      if (eval_on_component(words[i], comp, L) == eval_on_component(words[j], comp, L))
        throw internal_error("pair not separated (" + comp.case_label + "): " +
                             to_string(words[i]) + " vs " + to_string(words[j]));
      ++rep.pairs_checked;
      ++rep.case_histogram[comp.case_label];
    }
  rep.full_count = words.size();
  rep.kuratowski_count = words.size() / 2;
  return rep;
}

std::string certify_report_json(const CertifyReport& rep) {
  nlohmann::json j;
  j["n"] = rep.degree;
  j["kuratowski_count"] = rep.kuratowski_count;
  j["full_count"] = rep.full_count;
  j["pairs_checked"] = rep.pairs_checked;
  j["case_histogram"] = rep.case_histogram;
  return j.dump();
}

std::string component_space_json(const WitnessComponent& comp) {
  GroundSet ground = GroundSet::of_size(comp.ground_size());
  PolySpace space = PolySpace::make(ground, {comp.coarse, comp.fine});
  nlohmann::json j = nlohmann::json::parse(space_to_json(space));
  j["assign"] = comp.assign;
  auto test = nlohmann::json::array();
  for (unsigned i = 0; i < ground.size; ++i)
    if (comp.test_set & (SubsetMask{1} << i)) test.push_back(ground.names[i]);
  j["test_set"] = std::move(test);
  j["case"] = comp.case_label;
  return j.dump();
}

}  // namespace kurlab
