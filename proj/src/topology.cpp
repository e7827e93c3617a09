#include "kurlab/topology.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace kurlab {

GroundSet GroundSet::of_size(unsigned size, unsigned cap) {
  static const char* kNames[] = {"x", "y", "z", "u", "v", "w", "s", "t"};
  std::vector<std::string> names;
  for (unsigned i = 0; i < size; ++i)
    names.push_back(i < 8 ? kNames[i] : "e" + std::to_string(i));
  return with_names(std::move(names), cap);
}

GroundSet GroundSet::with_names(std::vector<std::string> names, unsigned cap) {
  if (names.empty()) throw input_error("ground set must be nonempty");
  if (names.size() > cap)
    throw limit_error("ground set of size " + std::to_string(names.size()) +
                      " exceeds the cap of " + std::to_string(cap));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw input_error("empty ground element name");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw input_error("duplicate ground element: " + names[i]);
  }
  GroundSet g;
  g.size = static_cast<unsigned>(names.size());
  g.names = std::move(names);
  return g;
}

std::string GroundSet::subset_name(SubsetMask m) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < size; ++i)
    if (m & (SubsetMask{1} << i)) {
      if (!first) out += ',';
      out += names[i];
      first = false;
    }
  return out + "}";
}

SubsetMask complement_of(SubsetMask m, unsigned ground_size) {
  return ~m & ((SubsetMask{1} << ground_size) - 1);
}

std::optional<std::string> FiniteTopology::check(unsigned ground_size,
                                                 const std::vector<SubsetMask>& opens) {
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  auto has = [&](SubsetMask m) { return std::find(opens.begin(), opens.end(), m) != opens.end(); };
  for (SubsetMask m : opens)
    if (m & ~full) return "open set has bits outside the ground set";
  if (!has(0)) return "missing the empty set";
  if (!has(full)) return "missing the full ground set";
  for (SubsetMask a : opens)
    for (SubsetMask b : opens) {
      if (!has(a | b))
        return "union of opens " + std::to_string(a) + " and " + std::to_string(b) +
               " is not open";
      if (!has(a & b))
        return "intersection of opens " + std::to_string(a) + " and " + std::to_string(b) +
               " is not open";
    }
  return std::nullopt;
}

FiniteTopology FiniteTopology::from_opens(unsigned ground_size, std::vector<SubsetMask> opens) {
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (auto violation = check(ground_size, opens))
    throw input_error("not a topology: " + *violation);
  FiniteTopology t;
  t.size_ = ground_size;
  t.opens_ = std::move(opens);
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  t.interior_.resize(std::size_t{1} << ground_size);
  t.closure_.resize(std::size_t{1} << ground_size);
  for (SubsetMask a = 0; a <= full; ++a) {
    SubsetMask in = 0, avoid = 0;
    for (SubsetMask u : t.opens_) {
      if ((u & ~a) == 0) in |= u;     // open inside a
      if ((u & a) == 0) avoid |= u;   // open missing a
    }
    t.interior_[a] = in;
    t.closure_[a] = full & ~avoid;  // smallest closed superset
    if (a == full) break;
  }
  return t;
}

FiniteTopology FiniteTopology::discrete(unsigned ground_size) {
  std::vector<SubsetMask> opens;
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  for (SubsetMask a = 0;; ++a) {
    opens.push_back(a);
    if (a == full) break;
  }
  return from_opens(ground_size, std::move(opens));
}

FiniteTopology FiniteTopology::antidiscrete(unsigned ground_size) {
  return from_opens(ground_size, {0, (SubsetMask{1} << ground_size) - 1});
}

bool FiniteTopology::coarser_or_equal(const FiniteTopology& finer) const {
  return std::includes(finer.opens_.begin(), finer.opens_.end(), opens_.begin(), opens_.end());
}

PolySpace PolySpace::make(GroundSet ground, std::vector<FiniteTopology> chain) {
  if (chain.empty()) throw input_error("a space needs at least one topology");
  for (const auto& t : chain)
    if (t.ground_size() != ground.size)
      throw input_error("topology ground size does not match the space");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!chain[i].coarser_or_equal(chain[i + 1]))
      throw input_error("topologies are not a chain: entry " + std::to_string(i) +
                        " is not contained in entry " + std::to_string(i + 1));
  return PolySpace{std::move(ground), std::move(chain)};
}

PolySpace space_from_json(const std::string& text, unsigned ground_cap) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("bad space JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("ground") || !j.contains("topologies"))
    throw input_error("space JSON needs 'ground' and 'topologies'");
  std::vector<std::string> names;
  for (const auto& n : j.at("ground")) {
    if (!n.is_string()) throw input_error("ground element names must be strings");
    names.push_back(n.get<std::string>());
  }
  GroundSet ground = GroundSet::with_names(std::move(names), ground_cap);
  std::unordered_map<std::string, unsigned> pos;
  for (unsigned i = 0; i < ground.size; ++i) pos[ground.names[i]] = i;

  std::vector<FiniteTopology> chain;
  for (const auto& top : j.at("topologies")) {
    std::vector<SubsetMask> opens;
    for (const auto& open : top) {
      SubsetMask m = 0;
      for (const auto& n : open) {
        auto it = pos.find(n.get<std::string>());
        if (it == pos.end())
          throw input_error("unknown ground element: " + n.get<std::string>());
        m |= SubsetMask{1} << it->second;
      }
      opens.push_back(m);
    }
    chain.push_back(FiniteTopology::from_opens(ground.size, std::move(opens)));
  }
  return PolySpace::make(std::move(ground), std::move(chain));
}

std::string space_to_json(const PolySpace& space) {
  nlohmann::json j;
  j["ground"] = space.ground.names;
  auto tops = nlohmann::json::array();
  for (const auto& t : space.chain) {
    auto opens = nlohmann::json::array();
    for (SubsetMask m : t.opens()) {
      auto open = nlohmann::json::array();
      for (unsigned i = 0; i < space.ground.size; ++i)
        if (m & (SubsetMask{1} << i)) open.push_back(space.ground.names[i]);
      opens.push_back(std::move(open));
    }
    tops.push_back(std::move(opens));
  }
  j["topologies"] = std::move(tops);
  return j.dump();
}

SetOperator SetOperator::identity(unsigned ground_size) {
  SetOperator op;
  op.table.resize(std::size_t{1} << ground_size);
  for (std::size_t a = 0; a < op.table.size(); ++a) op.table[a] = static_cast<SubsetMask>(a);
  return op;
}

SetOperator SetOperator::interior_of(const FiniteTopology& t) {
  SetOperator op;
  op.table.resize(std::size_t{1} << t.ground_size());
  for (std::size_t a = 0; a < op.table.size(); ++a)
    op.table[a] = t.interior(static_cast<SubsetMask>(a));
  return op;
}

SetOperator SetOperator::closure_of(const FiniteTopology& t) {
  SetOperator op;
  op.table.resize(std::size_t{1} << t.ground_size());
  for (std::size_t a = 0; a < op.table.size(); ++a)
    op.table[a] = t.closure(static_cast<SubsetMask>(a));
  return op;
}

SetOperator SetOperator::complement(unsigned ground_size) {
  SetOperator op;
  op.table.resize(std::size_t{1} << ground_size);
  for (std::size_t a = 0; a < op.table.size(); ++a)
    op.table[a] = complement_of(static_cast<SubsetMask>(a), ground_size);
  return op;
}

SetOperator SetOperator::after(const SetOperator& inner) const {
  SetOperator op;
  op.table.resize(table.size());
  for (std::size_t a = 0; a < table.size(); ++a) op.table[a] = table[inner.table[a]];
  return op;
}

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<SubsetMask>& t) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (SubsetMask m : t) h = (h ^ m) * 0x100000001b3ull;
    return h;
  }
};

std::vector<std::pair<std::string, SetOperator>> generators_of(const PolySpace& space,
                                                               bool with_complement) {
  std::vector<std::pair<std::string, SetOperator>> gens;
  for (std::size_t i = 0; i < space.chain.size(); ++i) {
    gens.emplace_back("i" + std::to_string(i), SetOperator::interior_of(space.chain[i]));
    gens.emplace_back("k" + std::to_string(i), SetOperator::closure_of(space.chain[i]));
  }
  if (with_complement) gens.emplace_back("c", SetOperator::complement(space.ground.size));
  return gens;
}

}  // namespace

GeneratedMonoid generate_monoid(const PolySpace& space, bool with_complement,
                                const GenerationLimits& lim) {
  auto gens = generators_of(space, with_complement);
  GeneratedMonoid out;
  out.with_complement = with_complement;

  std::unordered_map<std::vector<SubsetMask>, std::size_t, TableHash> seen;
  SetOperator id = SetOperator::identity(space.ground.size);
  seen.emplace(id.table, 0);
  out.elements.push_back(id);
  out.witnesses.push_back("1");

  // memory estimate guard: table bytes per element
  const std::size_t bytes_per = (std::size_t{1} << space.ground.size) * sizeof(SubsetMask);
  const std::size_t max_bytes = std::size_t{256} << 20;

  std::size_t next = 0;
  while (next < out.elements.size()) {
    SetOperator cur = out.elements[next];
    std::string cur_word = out.witnesses[next];
    ++next;
    for (const auto& [name, g] : gens) {
      SetOperator composed = g.after(cur);  // new word: name . cur_word
      if (seen.find(composed.table) != seen.end()) continue;
      if (out.elements.size() >= lim.max_size)
        throw limit_error("monoid generation exceeded the cap of " +
                          std::to_string(lim.max_size) + " elements (frontier at " +
                          std::to_string(out.elements.size()) + ")");
      if ((out.elements.size() + 1) * bytes_per > max_bytes)
        throw limit_error("monoid generation exceeded the memory budget");
      seen.emplace(composed.table, out.elements.size());
      out.elements.push_back(std::move(composed));
      out.witnesses.push_back(cur_word == "1" ? name : name + " " + cur_word);
    }
  }
  return out;
}

BoundReport verify_upper_bound(const PolySpace& space, bool with_complement,
                               const GenerationLimits& lim) {
  auto monoid = generate_monoid(space, with_complement, lim);
  BoundReport rep;
  rep.chain_length = static_cast<unsigned>(space.chain.size());
  rep.with_complement = with_complement;
  rep.monoid_size = monoid.elements.size();
  rep.bound = kuratowski_number(rep.chain_length, rep.chain_length);
  if (with_complement) rep.bound *= 2;
  rep.margin = rep.bound - static_cast<unsigned long>(rep.monoid_size);
  rep.holds = rep.margin >= 0;
  return rep;
}

bool is_saturated(const PolySpace& space) {
  for (const auto& t1 : space.chain)
    for (const auto& t2 : space.chain)
      for (SubsetMask u : t1.opens())
        if (u != 0 && t2.interior(u) == 0) return false;
  return true;
}

SaturatedReport verify_saturated_bound(const PolySpace& space, const GenerationLimits& lim) {
  if (!is_saturated(space)) throw input_error("space is not saturated");
  SaturatedReport rep;
  rep.monoid_size = generate_monoid(space, false, lim).elements.size();
  rep.bound = 1 + 6 * space.chain.size();
  rep.holds = rep.monoid_size <= rep.bound;
  return rep;
}

std::vector<SubsetMask> orbit(const PolySpace& space, SubsetMask start, bool with_complement,
                              const GenerationLimits& lim) {
  if (start & ~space.ground.full()) throw input_error("start set outside the ground set");
  auto gens = generators_of(space, with_complement);
  std::vector<SubsetMask> out{start};
  std::unordered_set<SubsetMask> seen{start};
  for (std::size_t next = 0; next < out.size(); ++next) {
    SubsetMask cur = out[next];
    for (const auto& [name, g] : gens) {
      SubsetMask img = g(cur);
      if (seen.insert(img).second) out.push_back(img);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteTopology> enumerate_topologies(unsigned ground_size) {
  if (ground_size == 0 || ground_size > 4)
    throw limit_error("topology enumeration supported for ground sizes 1..4");
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  std::vector<SubsetMask> mids;
  for (SubsetMask m = 1; m < full; ++m) mids.push_back(m);
  std::vector<FiniteTopology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << mids.size()); ++pick) {
    std::vector<SubsetMask> fam{0, full};
    for (std::size_t b = 0; b < mids.size(); ++b)
      if (pick & (std::uint64_t{1} << b)) fam.push_back(mids[b]);
    if (!FiniteTopology::check(ground_size, fam)) out.push_back(
        FiniteTopology::from_opens(ground_size, std::move(fam)));
  }
  return out;
}

namespace {

std::size_t closure_orbit_size(const FiniteTopology& a, const FiniteTopology& b,
                               SubsetMask start) {
  std::vector<SubsetMask> stack{start};
  std::unordered_set<SubsetMask> seen{start};
  while (!stack.empty()) {
    SubsetMask cur = stack.back();
    stack.pop_back();
    for (SubsetMask img : {a.closure(cur), b.closure(cur)})
      if (seen.insert(img).second) stack.push_back(img);
  }
  return seen.size();
}

FiniteTopology random_topology(unsigned ground_size, std::mt19937_64& rng) {
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  std::uniform_int_distribution<SubsetMask> pick(0, full);
  std::vector<SubsetMask> fam{0, full};
  unsigned seeds = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned i = 0; i < seeds; ++i) fam.push_back(pick(rng));
  // close under union and intersection
  for (;;) {
    std::size_t before = fam.size();
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        for (SubsetMask m : {static_cast<SubsetMask>(fam[i] | fam[j]),
                             static_cast<SubsetMask>(fam[i] & fam[j])})
          if (std::find(fam.begin(), fam.end(), m) == fam.end()) fam.push_back(m);
      }
    if (fam.size() == before) break;
  }
  return FiniteTopology::from_opens(ground_size, std::move(fam));
}

}  // namespace

IncomparableSearchResult search_incomparable(unsigned ground_size, std::uint64_t budget,
                                             std::uint64_t seed, unsigned ground_cap) {
  if (ground_size == 0 || ground_size > ground_cap)
    throw limit_error("ground size outside 1.." + std::to_string(ground_cap));
  const SubsetMask full = (SubsetMask{1} << ground_size) - 1;
  IncomparableSearchResult best;
  best.first = FiniteTopology::antidiscrete(ground_size);
  best.second = FiniteTopology::antidiscrete(ground_size);

  auto consider = [&](const FiniteTopology& a, const FiniteTopology& b) {
    if (a.coarser_or_equal(b) || b.coarser_or_equal(a)) return;  // comparable pairs excluded
    ++best.pairs_examined;
    for (SubsetMask s = 0; s <= full; ++s) {
      std::size_t n = closure_orbit_size(a, b, s);
      if (n > best.orbit_size) {
        best.orbit_size = n;
        best.first = a;
        best.second = b;
        best.start = s;
      }
      if (s == full) break;
    }
  };

  if (ground_size <= 3) {
    best.exhaustive = true;
    auto tops = enumerate_topologies(ground_size);
    for (std::size_t i = 0; i < tops.size(); ++i)
      for (std::size_t j = i + 1; j < tops.size(); ++j) consider(tops[i], tops[j]);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t it = 0; it < budget; ++it)
      consider(random_topology(ground_size, rng), random_topology(ground_size, rng));
  }
  return best;
}

std::string search_result_json(const IncomparableSearchResult& r, const GroundSet& ground) {
  nlohmann::json j;
  j["exhaustive"] = r.exhaustive;
  j["pairs_examined"] = r.pairs_examined;
  j["orbit_size"] = r.orbit_size;
  auto opens_json = [&](const FiniteTopology& t) {
    auto arr = nlohmann::json::array();
    for (SubsetMask m : t.opens()) {
      auto open = nlohmann::json::array();
      for (unsigned i = 0; i < ground.size; ++i)
        if (m & (SubsetMask{1} << i)) open.push_back(ground.names[i]);
      arr.push_back(std::move(open));
    }
    return arr;
  };
  j["first"] = opens_json(r.first);
  j["second"] = opens_json(r.second);
  auto start = nlohmann::json::array();
  for (unsigned i = 0; i < ground.size; ++i)
    if (r.start & (SubsetMask{1} << i)) start.push_back(ground.names[i]);
  j["start"] = std::move(start);
  return j.dump();
}

}  // namespace kurlab
