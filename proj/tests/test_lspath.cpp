#include "oracle.hpp"

#include "smtkit/ambient.hpp"
#include "smtkit/extend.hpp"
#include "smtkit/lspath.hpp"

#include <doctest.h>

using namespace smtkit;

namespace {

std::vector<int> all_nodes(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_SUITE("lspath") {

TEST_CASE("straight paths are LS-paths") {
  const Realization r(build_cartan({Family::C, 2}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1, 1});
  const LSPath p = straight_path(lam, act(r, Word{0, 1}, lam));
  CHECK(is_lspath(r, p));
  CHECK(p.endpoint() == act(r, Word{0, 1}, lam));
  CHECK(p.breakpoints().size() == 2);
}

TEST_CASE("a two-step path with a bad cut is rejected") {
  const Realization r(build_cartan({Family::A, 1}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{2});
  const WeightVec low = lam;
  const WeightVec high = r.reflect(0, lam);
  // <lam, alpha^vee> = 2, so a chain exists at a = 1/2 but not at 1/3
  LSPath good{lam, {high, low}, {0, Rational(1, 2), 1}};
  LSPath bad{lam, {high, low}, {0, Rational(1, 3), 1}};
  CHECK(is_lspath(r, good));
  CHECK_FALSE(is_lspath(r, bad));
}

TEST_CASE("oracle: path count and endpoints equal the character for the full flag") {
  for (const auto* name : {"A_2", "C_2", "B_2", "G_2", "A_3"}) {
    CAPTURE(name);
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    const Realization r(m);
    std::vector<int> lam(m.rank(), 0);
    lam[0] = 1;
    if (m.rank() > 1) lam[1] = 1;
    const WeightVec w = WeightVec::from_ints(m.id(), lam);
    const WeightVec top = act(r, longest_element(r, all_nodes(m.rank())), w);
    PathModel pm(r, w, top);
    const auto paths = pm.enumerate();
    const auto ref = oracle::character(m, w);
    CHECK(Integer(paths.size()) == oracle::dimension(ref));
    std::map<WeightVec, Integer> ends;
    for (const auto& p : paths) ends[p.endpoint()] += 1;
    CHECK(ends == ref);
    CHECK(pm.count() == paths.size());
  }
}

TEST_CASE("property: paths below a coset realise its Demazure character") {
  auto gen = oracle::rng();
  for (const auto* name : {"A_2", "C_2", "B_3"}) {
    const Realization r(build_cartan(FinTypeLabel::parse(name)));
    const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector<int>(r.rank(), 1));
    std::uniform_int_distribution<int> letter(0, r.rank() - 1);
    for (int t = 0; t < 6; ++t) {
      Word w(5);
      for (auto& x : w) x = letter(gen);
      w = reduce(r, w);
      CAPTURE(word_to_string(w));
      PathModel pm(r, lam, act(r, w, lam));
      std::map<WeightVec, Integer> ends;
      for (const auto& p : pm.enumerate()) {
        ends[p.endpoint()] += 1;
        CHECK(is_lspath(r, p));
      }
      CHECK(ends == demazure_character(r, w, lam));
    }
  }
}

TEST_CASE("paths on an affine diagram: D-degree is integral and the endpoint is below the shape") {
  const ExtendedDatum d = extend_restricted({Family::C, 2});
  const Realization r = Realization::of(d);
  const WeightVec shape = WeightVec::fundamental(d.extended.id(), d.rank(), 0);
  PathModel pm(r, shape, act(r, Word{0, 1, 0}, shape));
  const auto paths = pm.enumerate();
  CHECK(!paths.empty());
  for (const auto& p : paths) {
    CHECK(d_degree(r, p) >= 0);
    CHECK(is_lspath(r, p));
  }
}

TEST_CASE("standard from above: chains in the coset order") {
  const Realization r(build_cartan({Family::A, 1}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1});
  const CosetSpace space(r, lam);
  const LSPath lo = straight_path(lam, lam);
  const LSPath hi = straight_path(lam, r.reflect(0, lam));
  CHECK(path_leq(space, lo, hi));
  CHECK_FALSE(path_leq(space, hi, lo));
  const std::vector<LSPath> chain{lo, hi}, anti{hi, lo};
  CHECK(is_standard_above(space, chain));
  CHECK_FALSE(is_standard_above(space, anti));
}

TEST_CASE("dominance on a node set") {
  const Realization r(build_cartan({Family::A, 1}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{1});
  CHECK(is_dominant_on(straight_path(lam, lam), std::vector{0}));
  CHECK_FALSE(is_dominant_on(straight_path(lam, r.reflect(0, lam)), std::vector{0}));
}

TEST_CASE("tensor multiplicities against character peeling") {
  for (const auto* name : {"A_2", "C_2", "G_2"}) {
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs{{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}},
                                                                          {{1, 1}, {1, 0}}};
    for (const auto& [a, b] : pairs) {
      const WeightVec la = WeightVec::from_ints(m.id(), a), mu = WeightVec::from_ints(m.id(), b);
      for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) {
          const WeightVec nu = WeightVec::from_ints(m.id(), std::vector{x, y});
          INFO(name, " ", to_string(la), " x ", to_string(mu), " -> ", to_string(nu));
          CHECK(tensor_multiplicity(m, la, mu, nu) == oracle::tensor_mult(m, la, mu, nu));
        }
    }
  }
}

TEST_CASE("finite Weyl group: fibres and Bruhat order") {
  const FiniteWeylGroup w(Realization(build_cartan({Family::A, 2})));
  CHECK(w.size() == 6);
  const WeightVec lam = WeightVec::from_ints("A_2", std::vector{1, 0});
  std::size_t total = 0;
  for (const auto& pt : CosetSpace(w.realization(), lam).lower_interval(act(w.realization(), Word{1, 0}, lam)))
    total += w.fibre(lam, pt).size();
  CHECK(total == 6);
  for (std::size_t u = 0; u < w.size(); ++u) CHECK(w.leq(u, u));
}

TEST_CASE("flip lift carries degree-1 typed paths to omega_0 paths") {
  const AmbientModel model = AmbientModel::flip({Family::A, 1});
  const Realization fin(model.ambient().base);
  const Realization ext = Realization::of(model.ambient());
  const WeightVec e1 = model.eps_image(1);
  const WeightVec top = act(fin, longest_element(fin, all_nodes(fin.rank())), e1);
  for (const auto& p : PathModel(fin, e1, top).enumerate()) {
    const LSPath up = lift_path(model, TypedPath{1, p});
    CHECK(is_lspath(ext, up));
    CHECK(up.shape == WeightVec::fundamental(model.ambient().extended.id(), ext.rank(), 0));
  }
}

TEST_CASE("denominator cap is enforced") {
  const Realization r(build_cartan({Family::G, 2}));
  const WeightVec lam = WeightVec::from_ints(r.gcm().id(), std::vector{4, 4});
  EnumerationOptions tight;
  tight.denominator_cap = 2;
  CHECK_THROWS_AS(PathModel(r, lam, act(r, Word{0, 1, 0, 1, 0, 1}, lam), tight).enumerate(), DenominatorCapError);
}

}  // TEST_SUITE
