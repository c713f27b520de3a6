#include "oracle.hpp"

#include "smtkit/extend.hpp"
#include "smtkit/lspath.hpp"
#include "smtkit/weyl.hpp"

#include <doctest.h>

#include <algorithm>

using namespace smtkit;

namespace {

Word random_word(std::mt19937_64& gen, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, rank - 1);
  Word w(len(gen));
  for (auto& x : w) x = letter(gen);
  return w;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("word parsing") {
  CHECK(parse_word("0,1,0") == Word{0, 1, 0});
  CHECK(parse_word("").empty());
  CHECK(word_to_string(Word{2, 1}) == "2,1");
  CHECK_THROWS(parse_word("0,x"));
}

TEST_CASE("Weyl group orders against orbit search") {
  for (const auto* name : {"A_2", "A_3", "B_2", "B_3", "C_3", "G_2", "D_4"}) {
    CAPTURE(name);
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    CHECK(FiniteWeylGroup(Realization(m)).size() == oracle::weyl_order(m));
  }
  CHECK(oracle::weyl_order(build_cartan({Family::G, 2})) == 12);
  CHECK(oracle::weyl_order(build_cartan({Family::B, 3})) == 48);
}

TEST_CASE("longest element length is the number of positive roots") {
  for (const auto* name : {"A_3", "B_3", "G_2", "F_4"}) {
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    const Realization r(m);
    std::vector<int> all(m.rank());
    for (int i = 0; i < m.rank(); ++i) all[i] = i;
    CHECK(longest_element(r, all).size() == positive_roots(m).size());
  }
}

TEST_CASE("property: reduce preserves the element and never lengthens") {
  auto gen = oracle::rng();
  for (const auto* name : {"A_3", "C_3", "G_2"}) {
    const Realization r(build_cartan(FinTypeLabel::parse(name)));
    for (int t = 0; t < 40; ++t) {
      const Word w = random_word(gen, r.rank(), 10);
      const Word red = reduce(r, w);
      CHECK(red.size() <= w.size());
      CHECK(same_element(r, w, red));
      CHECK(reduce(r, red) == red);
      CHECK(length(r, w) == red.size());
    }
  }
}

TEST_CASE("property: reversed word inverts the action, also on affine diagrams") {
  auto gen = oracle::rng(11);
  const ExtendedDatum d = extend_restricted({Family::C, 2});
  const Realization affine = Realization::of(d);
  const Realization finite(build_cartan({Family::B, 3}));
  for (const Realization* r : {&affine, &finite}) {
    const WeightVec lam = WeightVec::from_ints(r->gcm().id(), std::vector<int>(r->rank(), 1), 0);
    for (int t = 0; t < 30; ++t) {
      Word w = random_word(gen, r->rank(), 12);
      const WeightVec x = act(*r, w, lam);
      std::reverse(w.begin(), w.end());
      CHECK(act(*r, w, x) == lam);
    }
  }
}

TEST_CASE("action matches the hand-written reflection") {
  const GCM m = build_cartan({Family::G, 2});
  const Realization r(m);
  const WeightVec lam = WeightVec::from_ints(m.id(), std::vector{2, 1});
  CHECK(act(r, Word{0, 1}, lam) == oracle::reflect(m, 0, oracle::reflect(m, 1, lam)));
}

TEST_CASE("descend_to_dominant returns a word carrying the dominant weight back") {
  auto gen = oracle::rng(3);
  const Realization r(build_cartan({Family::C, 3}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1, 0, 2});
  for (int t = 0; t < 20; ++t) {
    const WeightVec mu = act(r, random_word(gen, 3, 9), lam);
    WeightVec dom;
    const Word w = descend_to_dominant(r, mu, &dom);
    CHECK(dom == lam);
    CHECK(act(r, w, lam) == mu);
  }
}

TEST_CASE("coset space: Bruhat order and intervals") {
  const Realization r(build_cartan({Family::A, 2}));
  const WeightVec base = WeightVec::from_ints(r.gcm().id(), std::vector{1, 0});
  const CosetSpace space(r, base);
  CHECK(space.parabolic() == std::vector<int>{1});
  const WeightVec top = space.point(Word{1, 0});
  CHECK(space.lower_interval(top).size() == 3);
  CHECK(space.leq(base, top));
  CHECK_FALSE(space.leq(top, base));
  CHECK(space.length(top) == 2);
  const auto n = space.reflection_pairing(base, space.point(Word{0}));
  REQUIRE(n.has_value());
  CHECK(*n == 1);
}

TEST_CASE("Demazure character of the longest element is the full character") {
  for (const auto* name : {"A_2", "C_2", "G_2", "B_3"}) {
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    const Realization r(m);
    std::vector<int> all(m.rank());
    for (int i = 0; i < m.rank(); ++i) all[i] = i;
    const WeightVec lam = WeightVec::from_ints(m.id(), std::vector<int>(m.rank(), 1));
    const Character ch = demazure_character(r, longest_element(r, all), lam);
    const auto ref = oracle::character(m, lam);
    CHECK(ch.size() == ref.size());
    for (const auto& [w, c] : ref) CHECK(ch.at(w) == c);
  }
}

TEST_CASE("Demazure characters grow along a reduced word") {
  const Realization r(build_cartan({Family::C, 2}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1, 1});
  Integer prev = 0;
  Word w;
  for (int k = 0; k < 4; ++k) {
    w.insert(w.begin(), k % 2);
    const Integer d = total_multiplicity(demazure_character(r, w, lam));
    CHECK(d > prev);
    prev = d;
  }
  CHECK(prev == 16);
}

TEST_CASE("tau^ words on restricted extended diagrams") {
  const ExtendedDatum d = extend_restricted({Family::A, 2});
  CHECK(tau_hat(0, d).empty());
  CHECK(tau_hat(1, d) == Word{0});
  CHECK(tau_hat(2, d) == Word{0, 1, 0});
  const Realization r = Realization::of(d);
  const auto reps = dominant_orbit_reps(d);
  REQUIRE(reps.size() == 3);
  for (int m = 0; m <= 2; ++m) CHECK(reps[m] == act(r, tau_hat(m, d), eomega0(d)));
}

TEST_CASE("small orbit of ^e omega_0 has 2^l points") {
  // stabilizer of type A_{l-1} inside C_l
  for (int l = 2; l <= 4; ++l) {
    CAPTURE(l);
    CHECK(small_orbit(extend_restricted({Family::C, l})).size() == std::size_t{1} << l);
  }
}

}  // TEST_SUITE
