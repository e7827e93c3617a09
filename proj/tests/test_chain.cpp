#include <doctest.h>

#include <algorithm>
#include <random>

#include "kurlab/chain.hpp"

using namespace kurlab;

TEST_CASE("letter order follows the operator chain") {
  // i0 < i1 < ... < 1 < ... < k1 < k0
  CHECK(Letter::interior(0) < Letter::interior(1));
  CHECK(Letter::interior(1) < Letter::one());
  CHECK(Letter::one() < Letter::closure(1));
  CHECK(Letter::closure(1) < Letter::closure(0));
  CHECK(to_string(Letter::interior(2)) == "i2");
  CHECK(to_string(Letter::one()) == "1");
  CHECK(to_string(Letter::closure(0)) == "k0");
}

TEST_CASE("chain construction and ranks") {
  PointedChain c11(1, 1);
  CHECK(c11.size() == 3);
  CHECK(c11.letters() ==
        std::vector<Letter>{Letter::interior(0), Letter::one(), Letter::closure(0)});

  PointedChain c00(0, 0);
  CHECK(c00.size() == 1);
  CHECK(c00.letters() == std::vector<Letter>{Letter::one()});

  PointedChain c22(2, 2);
  CHECK(c22.size() == 5);
  CHECK(c22.letters() == std::vector<Letter>{Letter::interior(0), Letter::interior(1),
                                             Letter::one(), Letter::closure(1),
                                             Letter::closure(0)});
  for (unsigned r = 0; r < c22.size(); ++r) CHECK(c22.rank(c22.letter_at(r)) == r);
  CHECK(!c22.contains(Letter::interior(2)));
  CHECK_THROWS_AS(c22.rank(Letter::closure(5)), input_error);
}

TEST_CASE("star involution reverses the order and fixes only the unit") {
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    StarChain s(n);
    auto letters = s.base().letters();
    for (Letter x : letters) {
      CHECK(s.star(s.star(x)) == x);
      CHECK((s.star(x) == x) == x.is_unit());
      for (Letter y : letters)
        if (x < y) CHECK(s.star(y) < s.star(x));
    }
  }
}

TEST_CASE("morphism validation") {
  PointedChain c22(2, 2);

  SUBCASE("identity is valid") {
    CHECK(validate_morphism(identity_morphism(c22)).valid);
  }
  SUBCASE("the four collapse morphisms are valid and surjective") {
    for (auto m : {collapse_interiors(), collapse_interior_unit(), collapse_unit_closure(),
                   collapse_closures()}) {
      auto check = validate_morphism(m);
      CAPTURE(check.violation);
      CHECK(check.valid);
      // surjectivity onto the smaller chain
      auto targets = m.dst.letters();
      for (Letter t : targets)
        CHECK(std::count(m.map.begin(), m.map.end(), t) >= 1);
    }
  }
  SUBCASE("order reversal is rejected with a report") {
    PointedChain c11(1, 1);
    ChainMorphism bad{c11, c11, {Letter::closure(0), Letter::one(), Letter::interior(0)}};
    auto check = validate_morphism(bad);
    CHECK(!check.valid);
    CHECK(check.violation.find("i0") != std::string::npos);
  }
  SUBCASE("unit must map to the unit") {
    PointedChain c11(1, 1);
    ChainMorphism bad{c11, c11, {Letter::interior(0), Letter::interior(0), Letter::closure(0)}};
    auto check = validate_morphism(bad);
    CHECK(!check.valid);
    CHECK(check.violation.find("unit") != std::string::npos);
  }
  SUBCASE("collapse maps agree with their names") {
    auto h = collapse_interiors();
    CHECK(h.apply(Letter::interior(0)) == Letter::interior(0));
    CHECK(h.apply(Letter::interior(1)) == Letter::interior(0));
    CHECK(h.apply(Letter::closure(1)) == Letter::closure(1));
    auto g = collapse_interior_unit();
    CHECK(g.apply(Letter::interior(1)) == Letter::one());
    CHECK(g.apply(Letter::interior(0)) == Letter::interior(0));
  }
}

TEST_CASE("star morphisms") {
  PointedChain c22(2, 2);
  CHECK(is_star_morphism(identity_morphism(c22)));
  // targets are not square chains
  CHECK(!is_star_morphism(collapse_interiors()));
  // square but star-incompatible: send i0,i1 -> i0 and k1,k0 -> k0 is star-compatible,
  // while fixing k1 breaks it
  ChainMorphism sym{c22, PointedChain(1, 1),
                    {Letter::interior(0), Letter::interior(0), Letter::one(),
                     Letter::closure(0), Letter::closure(0)}};
  CHECK(is_star_morphism(sym));
  ChainMorphism skew{c22, c22,
                     {Letter::interior(0), Letter::interior(0), Letter::one(),
                      Letter::closure(1), Letter::closure(1)}};
  CHECK(validate_morphism(skew).valid);
  CHECK(!is_star_morphism(skew));
}

namespace {

// random monotone unit-preserving letter map between two chains
ChainMorphism random_morphism(const PointedChain& src, const PointedChain& dst,
                              std::mt19937& rng) {
  // pick a monotone map on negative ranks into dst ranks <= unit, and on
  // positive ranks into dst ranks >= unit
  std::vector<Letter> map(src.size(), Letter::one());
  std::uniform_int_distribution<unsigned> lo(0, dst.negatives());
  std::vector<unsigned> neg;
  for (unsigned i = 0; i < src.negatives(); ++i) neg.push_back(lo(rng));
  std::sort(neg.begin(), neg.end());
  for (unsigned i = 0; i < src.negatives(); ++i) map[i] = dst.letter_at(neg[i]);
  std::uniform_int_distribution<unsigned> hi(dst.negatives(), dst.size() - 1);
  std::vector<unsigned> pos;
  for (unsigned i = 0; i < src.positives(); ++i) pos.push_back(hi(rng));
  std::sort(pos.begin(), pos.end());
  for (unsigned i = 0; i < src.positives(); ++i)
    map[src.negatives() + 1 + i] = dst.letter_at(pos[i]);
  return {src, dst, std::move(map)};
}

}  // namespace

TEST_CASE("composition of valid morphisms is valid") {
  std::mt19937 rng(7);
  PointedChain a(3, 2), b(2, 3), c(1, 1);
  for (int it = 0; it < 200; ++it) {
    auto f = random_morphism(a, b, rng);
    auto g = random_morphism(b, c, rng);
    REQUIRE(validate_morphism(f).valid);
    REQUIRE(validate_morphism(g).valid);
    auto gf = compose(g, f);
    CHECK(validate_morphism(gf).valid);
    for (Letter l : a.letters()) CHECK(gf.apply(l) == g.apply(f.apply(l)));
  }
  CHECK_THROWS_AS(compose(random_morphism(a, b, rng), random_morphism(b, c, rng)), input_error);
}
