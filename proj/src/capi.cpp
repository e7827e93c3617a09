#include "kurlab.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "kurlab/counting.hpp"
#include "kurlab/errors.hpp"
#include "kurlab/rewrite.hpp"
#include "kurlab/topology.hpp"
#include "kurlab/witness.hpp"
#include "kurlab/word.hpp"

using namespace kurlab;

struct kur_monoid {
  FreeKuratowskiMonoid impl;
};

struct kur_space {
  PolySpace impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kur_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const input_error& e) {
    g_last_error = e.what();
    return KUR_ERR_INPUT;
  } catch (const limit_error& e) {
    g_last_error = e.what();
    return KUR_ERR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KUR_ERR_INTERNAL;
  }
}

kur_status require(bool cond, const char* message) {
  if (cond) return KUR_OK;
  g_last_error = message;
  return KUR_ERR_INPUT;
}

}  // namespace

extern "C" {

const char* kur_version(void) { return "kurlab 1.0.0"; }

const char* kur_last_error(void) { return g_last_error.c_str(); }

void kur_string_free(char* s) { std::free(s); }

kur_status kur_count(unsigned n, unsigned p, char** out) {
  if (require(out != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out = dup_string(kuratowski_number(n, p).get_str());
    return KUR_OK;
  });
}

kur_status kur_count_grid(unsigned max_n, unsigned max_p, char** out_csv) {
  if (require(out_csv != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_csv = dup_string(kuratowski_grid_csv(max_n, max_p));
    return KUR_OK;
  });
}

kur_status kur_count_diagonal(unsigned max_n, char** out_csv) {
  if (require(out_csv != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_csv = dup_string(kuratowski_diagonal_csv(max_n));
    return KUR_OK;
  });
}

kur_status kur_family_counts(unsigned n, unsigned p, char** out_json) {
  if (require(out_json != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    FamilyCounts fc = family_counts(n, p);
    nlohmann::json j;
    j["vmp"] = fc.vmp.get_str();
    j["vpm"] = fc.vpm.get_str();
    j["wplus"] = fc.wplus.get_str();
    j["wminus"] = fc.wminus.get_str();
    j["total"] = fc.total_with_singles(n, p).get_str();
    *out_json = dup_string(j.dump());
    return KUR_OK;
  });
}

kur_status kur_growth_ratio(unsigned n, char** out) {
  if (require(out != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out = dup_string(growth_ratio(n).get_str());
    return KUR_OK;
  });
}

kur_status kur_verify_sup_bound(unsigned max_n, int* out_holds, unsigned* out_first_violation) {
  if (require(out_holds != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    auto rep = verify_sup_bound(max_n);
    *out_holds = rep.holds ? 1 : 0;
    if (out_first_violation) *out_first_violation = rep.first_violation.value_or(0);
    return rep.holds ? KUR_OK : KUR_CHECK_FAILED;
  });
}

kur_status kur_stirling_ratio(unsigned n, char** out) {
  if (require(out != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out = dup_string(stirling_ratio(n).get_str());
    return KUR_OK;
  });
}

kur_status kur_asympt_report(unsigned max_n, int with_stirling, unsigned stirling_n,
                             char** out_json) {
  if (require(out_json != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    auto rep = verify_sup_bound(max_n);
    nlohmann::json j;
    j["max_n"] = max_n;
    j["sup_bound_holds"] = rep.holds;
    if (rep.first_violation)
      j["first_violation"] = *rep.first_violation;
    else
      j["first_violation"] = nullptr;
    nlohmann::json ratios;
    for (unsigned n = 0; n <= std::min(max_n, 6u); ++n)
      ratios[std::to_string(n)] = growth_ratio(n).get_str();
    j["growth_ratios"] = std::move(ratios);
    if (with_stirling) {
      unsigned n = stirling_n ? stirling_n : std::min(max_n, 50u);
      if (n < 1) n = 1;
      BigRat ratio = stirling_ratio(n);
      nlohmann::json s;
      s["n"] = n;
      s["ratio"] = ratio.get_str();
      s["times_pi_low"] = BigRat(ratio * pi_lower_bound()).get_d();
      s["times_pi_high"] = BigRat(ratio * pi_upper_bound()).get_d();
      j["stirling"] = std::move(s);
    }
    *out_json = dup_string(j.dump());
    return rep.holds ? KUR_OK : KUR_CHECK_FAILED;
  });
}

kur_status kur_enumerate(unsigned n, unsigned p, int full, unsigned max_each, int as_json,
                         char** out) {
  if (require(out != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    EnumLimits lim;
    if (max_each) lim.max_each = max_each;
    PointedChain chain(n, p);
    std::vector<std::string> lines;
    if (full) {
      for (const auto& w : enumerate_full(chain, lim)) lines.push_back(to_string(w));
    } else {
      for (const auto& w : enumerate_kuratowski(chain, lim)) lines.push_back(to_string(w));
    }
    if (as_json) {
      *out = dup_string(nlohmann::json(lines).dump());
    } else {
      std::string text;
      for (const auto& l : lines) {
        text += l;
        text += '\n';
      }
      *out = dup_string(text);
    }
    return KUR_OK;
  });
}

kur_status kur_normalize(unsigned n, unsigned p, const char* word, char** out) {
  if (require(word && out, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    PointedChain chain(n, p);
    *out = dup_string(to_string(normalize(parse_word(chain, word), chain)));
    return KUR_OK;
  });
}

kur_status kur_words_equal(unsigned n, unsigned p, const char* u, const char* v, int* out_equal) {
  if (require(u && v && out_equal, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    PointedChain chain(n, p);
    *out_equal = words_equal(parse_word(chain, u), parse_word(chain, v), chain) ? 1 : 0;
    return KUR_OK;
  });
}

kur_status kur_classify(unsigned n, unsigned p, const char* word, char** out_json) {
  if (require(word && out_json, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    PointedChain chain(n, p);
    Word w = parse_word(chain, word);
    nlohmann::json j;
    j["alternating"] = is_alternating(w, chain);
    auto cls = classify(w, chain);
    if (cls) {
      j["family"] = to_string(cls->family);
      j["pivot"] = cls->pivot;
    } else {
      j["family"] = nullptr;
    }
    *out_json = dup_string(j.dump());
    return KUR_OK;
  });
}

kur_status kur_monoid_build(unsigned n, unsigned p, size_t max_elements, kur_monoid** out) {
  if (require(out != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    FreeMonoidLimits lim;
    if (max_elements) lim.max_elements = max_elements;
    *out = new kur_monoid{FreeKuratowskiMonoid::build(PointedChain(n, p), lim)};
    return KUR_OK;
  });
}

void kur_monoid_free(kur_monoid* m) { delete m; }

size_t kur_monoid_size(const kur_monoid* m) { return m ? m->impl.size() : 0; }

kur_status kur_monoid_element(const kur_monoid* m, size_t index, char** out) {
  if (require(m && out, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  if (require(index < m->impl.size(), "element index out of range") != KUR_OK)
    return KUR_ERR_INPUT;
  return wrap([&] {
    *out = dup_string(to_string(m->impl.element(index)));
    return KUR_OK;
  });
}

kur_status kur_monoid_idempotent(const kur_monoid* m, int* out_ok) {
  if (require(m && out_ok, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_ok = m->impl.all_idempotent() ? 1 : 0;
    return *out_ok ? KUR_OK : KUR_CHECK_FAILED;
  });
}

kur_status kur_monoid_hasse_dot(kur_monoid* m, char** out_dot) {
  if (require(m && out_dot, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_dot = dup_string(m->impl.hasse_dot());
    return KUR_OK;
  });
}

kur_status kur_monoid_json(kur_monoid* m, char** out_json) {
  if (require(m && out_json, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_json = dup_string(m->impl.to_json());
    return KUR_OK;
  });
}

kur_status kur_space_parse(const char* json, unsigned ground_cap, kur_space** out) {
  if (require(json && out, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out = new kur_space{space_from_json(json, ground_cap ? ground_cap : kDefaultGroundCap)};
    return KUR_OK;
  });
}

void kur_space_free(kur_space* s) { delete s; }

kur_status kur_space_monoid_report(const kur_space* s, int with_complement, size_t max_size,
                                   char** out_json) {
  if (require(s && out_json, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    GenerationLimits lim;
    if (max_size) lim.max_size = max_size;
    auto monoid = generate_monoid(s->impl, with_complement != 0, lim);
    nlohmann::json j;
    j["ground_size"] = s->impl.ground.size;
    j["chain_length"] = s->impl.chain.size();
    j["with_complement"] = with_complement != 0;
    j["size"] = monoid.elements.size();
    j["witnesses"] = monoid.witnesses;
    *out_json = dup_string(j.dump());
    return KUR_OK;
  });
}

kur_status kur_space_verify_bound(const kur_space* s, int with_complement, size_t max_size,
                                  char** out_json) {
  if (require(s && out_json, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    GenerationLimits lim;
    if (max_size) lim.max_size = max_size;
    auto rep = verify_upper_bound(s->impl, with_complement != 0, lim);
    nlohmann::json j;
    j["size"] = rep.monoid_size;
    j["bound"] = rep.bound.get_str();
    j["margin"] = rep.margin.get_str();
    j["holds"] = rep.holds;
    j["chain_length"] = rep.chain_length;
    j["with_complement"] = rep.with_complement;
    *out_json = dup_string(j.dump());
    return rep.holds ? KUR_OK : KUR_CHECK_FAILED;
  });
}

kur_status kur_space_saturated(const kur_space* s, int* out_saturated) {
  if (require(s && out_saturated, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_saturated = is_saturated(s->impl) ? 1 : 0;
    return KUR_OK;
  });
}

kur_status kur_space_saturated_bound(const kur_space* s, size_t max_size, char** out_json) {
  if (require(s && out_json, "null argument") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    GenerationLimits lim;
    if (max_size) lim.max_size = max_size;
    auto rep = verify_saturated_bound(s->impl, lim);
    nlohmann::json j;
    j["size"] = rep.monoid_size;
    j["bound"] = rep.bound;
    j["holds"] = rep.holds;
    *out_json = dup_string(j.dump());
    return rep.holds ? KUR_OK : KUR_CHECK_FAILED;
  });
}

kur_status kur_witness_certify(unsigned n, char** out_json) {
  if (require(out_json != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    *out_json = dup_string(certify_report_json(certify_exactness(n)));
    return KUR_OK;
  });
}

kur_status kur_search_incomparable(unsigned ground, unsigned long long budget,
                                   unsigned long long seed, unsigned ground_cap, char** out_json) {
  if (require(out_json != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    unsigned cap = ground_cap ? ground_cap : kDefaultGroundCap;
    auto result = search_incomparable(ground, budget, seed, cap);
    *out_json = dup_string(search_result_json(result, GroundSet::of_size(ground, cap)));
    return KUR_OK;
  });
}

kur_status kur_quadruple_check(char** out_json) {
  if (require(out_json != nullptr, "null output") != KUR_OK) return KUR_ERR_INPUT;
  return wrap([&] {
    auto rep = quadruple_separation_check();
    nlohmann::json j;
    j["distinct"] = rep.distinct;
    j["quadruple_count"] = rep.quadruple_count;
    j["matches_reference"] = rep.matches_reference;
    *out_json = dup_string(j.dump());
    return rep.distinct && rep.matches_reference ? KUR_OK : KUR_CHECK_FAILED;
  });
}

}  // extern "C"
