#include "oracle.hpp"

#include "smtkit/ambient.hpp"
#include "smtkit/extend.hpp"
#include "smtkit/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace smtkit;

TEST_SUITE("extend") {

TEST_CASE("restricted extensions by family") {
  for (int l = 1; l <= 4; ++l) {
    CAPTURE(l);
    CHECK(identify_label(extend_restricted({Family::A, l}).extended) == "C_" + std::to_string(l + 1));
    CHECK(identify_label(extend_restricted({Family::B, l}).extended) == "A_" + std::to_string(2 * l) + "^{(2)}");
    CHECK(identify_label(extend_restricted({Family::BC, l}).extended) == "A_" + std::to_string(2 * l) + "^{(2)}");
    if (l >= 2) CHECK(identify_label(extend_restricted({Family::C, l}).extended) == "C_" + std::to_string(l) + "^{(1)}");
    if (l >= 4) CHECK(identify_label(extend_restricted({Family::D, l}).extended) == "A_" + std::to_string(2 * l - 1) + "^{(2)}");
  }
}

TEST_CASE("node 0 row is -2 <eps_1, alpha^vee> on the restricted tier") {
  const ExtendedDatum d = extend_restricted({Family::C, 3});
  CHECK(d.tier == Tier::Restricted);
  CHECK(d.kind == GcmClass::Affine);
  CHECK(d.extended(0, 0) == 2);
  CHECK(d.extended(0, 1) == -2);
  CHECK(d.extended(1, 0) == -1);
  CHECK(d.extended(0, 2) == 0);
}

TEST_CASE("ambient extension of C_2 + C_2 by (omega_1, omega_1) is a single affine diagram") {
  const GCM h = build_cartan({Family::C, 2});
  const GCM base = direct_sum(h, h);
  const ExtendedDatum d = extend_ambient(base, WeightVec::from_ints(base.id(), std::vector{1, 0, 1, 0}));
  CHECK(d.kind == GcmClass::Affine);
  CHECK(identify_label(d.extended) == "C_4^{(1)}");
}

TEST_CASE("ambient extension of A_1 by 2 omega_1 is finite C_2") {
  const GCM a1 = build_cartan({Family::A, 1});
  const ExtendedDatum d = extend_ambient(a1, WeightVec::from_ints(a1.id(), std::vector{2}));
  CHECK(d.kind == GcmClass::Finite);
  CHECK(identify_label(d.extended) == "C_2");
}

TEST_CASE("property: isomorphism search recovers a random relabelling") {
  auto gen = oracle::rng();
  for (const auto* name : {"C_3^{(1)}", "A_6^{(2)}", "A_7^{(2)}"}) {
    const GCM m = build_affine_cartan(name);
    std::vector<int> perm(m.rank());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    IntMatrix e(m.rank(), std::vector<int>(m.rank()));
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) e[perm[i]][perm[j]] = m(i, j);
    const GCM p(e);
    const auto iso = find_isomorphism(m, p);
    REQUIRE(iso.has_value());
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) CHECK(m(i, j) == p((*iso)[i], (*iso)[j]));
    CHECK(identify_label(p) == name);
  }
}

TEST_CASE("n0 is 0 in affine type and (l+1)/2 in finite type") {
  CHECK(n0(extend_restricted({Family::C, 2})) == 0);
  CHECK(n0(extend_restricted({Family::B, 3})) == 0);
  CHECK(n0(extend_restricted({Family::A, 1})) == 1);
  CHECK(n0(extend_restricted({Family::A, 3})) == 2);
  CHECK(n0(extend_restricted({Family::A, 2})) == Rational(3, 2));
}

TEST_CASE("^e omega_0 is half the zeroth fundamental weight and attains the grading bound") {
  for (const FinTypeLabel l : {FinTypeLabel{Family::A, 2}, FinTypeLabel{Family::C, 3}, FinTypeLabel{Family::B, 2}}) {
    const ExtendedDatum d = extend_restricted(l);
    const WeightVec w = eomega0(d);
    CHECK(w.coords[0] == Rational(1, 2));
    for (int i = 1; i < d.rank(); ++i) CHECK(w.coords[i] == 0);
    CHECK(egr(d, w) == n0(d));
  }
}

TEST_CASE("property: split coordinates roundtrip") {
  auto gen = oracle::rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const FinTypeLabel l : {FinTypeLabel{Family::A, 2}, FinTypeLabel{Family::C, 3}, FinTypeLabel{Family::BC, 2}}) {
    const ExtendedDatum d = extend_restricted(l);
    for (int trial = 0; trial < 20; ++trial) {
      SplitWeight s;
      for (int i = 0; i < d.rank(); ++i) s.eps_coords.push_back(coef(gen));
      if (d.kind == GcmClass::Affine) s.delta = coef(gen);
      const WeightVec w = from_split(d, s);
      const SplitWeight back = to_split(d, w);
      CHECK(from_split(d, back) == w);
    }
  }
}

TEST_CASE("simple roots in the eps basis and their gradings") {
  for (const FinTypeLabel l : {FinTypeLabel{Family::A, 1}, FinTypeLabel{Family::A, 3}, FinTypeLabel{Family::B, 3},
                               FinTypeLabel{Family::C, 2}, FinTypeLabel{Family::C, 4}, FinTypeLabel{Family::BC, 2}}) {
    CAPTURE(l.name());
    const ExtendedDatum d = extend_restricted(l);
    const Realization r = Realization::of(d);
    const int rank = l.rank;
    const Rational delta0 = d.kind == GcmClass::Affine ? 1 : 0;
    // alpha_0 = 2 e_0 - 2 e_1 + 2 delta_0
    SplitWeight s0;
    s0.eps_coords.assign(rank + 1, 0);
    s0.eps_coords[0] = 2;
    s0.eps_coords[1] = -2;
    s0.delta = 2 * delta0;
    CHECK(from_split(d, s0) == r.simple_root(0));
    // alpha_i = 2 e_i - e_{i-1} - e_{i+1}
    for (int i = 1; i < rank; ++i) {
      SplitWeight si;
      si.eps_coords.assign(rank + 1, 0);
      si.eps_coords[i] = 2;
      si.eps_coords[i - 1] = -1;
      si.eps_coords[i + 1] = -1;
      CHECK(from_split(d, si) == r.simple_root(i));
    }
    for (int i = 0; i < rank; ++i) CHECK(egr(d, r.simple_root(i)) == 0);
    CHECK(egr(d, r.simple_root(rank)) > 0);
  }
}

TEST_CASE("egr is additive on split weights") {
  const ExtendedDatum d = extend_restricted({Family::C, 2});
  SplitWeight a{{1, 0, 2}, 0, 1}, b{{0, 3, 1}, 0, -2};
  SplitWeight sum{{1, 3, 3}, 0, -1};
  CHECK(egr(d, a) + egr(d, b) == egr(d, sum));
  CHECK(gr(QVector{1, 1}) == 3);
}

TEST_CASE("flip model: sigma is an involution and restriction inverts the lift") {
  const AmbientModel m = AmbientModel::flip({Family::C, 2});
  CHECK(m.ambient().base_rank() == 4);
  CHECK(identify_label(m.ambient().extended) == "C_4^{(1)}");
  const Realization r = Realization::of(m.ambient());
  for (int a = 0; a < r.rank(); ++a) {
    const WeightVec& alpha = r.simple_root(a);
    CHECK(m.sigma(m.sigma(alpha)) == alpha);
  }
  for (int i = 0; i < m.rank() + 1; ++i) {
    WeightVec rw = WeightVec::fundamental(m.restricted().extended.id(), m.rank() + 1, i);
    const WeightVec lifted = m.lift_weight(rw);
    CHECK(m.is_split(lifted));
    CHECK(m.restrict_weight(lifted) == rw);
  }
}

TEST_CASE("reduced Cartan matrix rebuilt from the ambient tier matches the restricted tier") {
  for (const auto& model : {AmbientModel::flip({Family::A, 2}), AmbientModel::flip({Family::C, 2}),
                            AmbientModel::flip({Family::B, 2}), AmbientModel::symmetric_quadrics(3)}) {
    CAPTURE(identify_label(model.ambient().extended));
    CHECK(model.reduced_cartan().entries() == model.restricted().extended.entries());
    CHECK(model.reduced_root_delta() == model.restricted().root_delta);
  }
}

TEST_CASE("lifted reflections act like restricted reflections on split weights") {
  const AmbientModel m = AmbientModel::flip({Family::C, 2});
  const Realization ar = Realization::of(m.ambient());
  const Realization rr = Realization::of(m.restricted());
  const WeightVec lam = WeightVec::from_ints(m.restricted().extended.id(), std::vector{1, 2, 1});
  for (int i = 0; i < rr.rank(); ++i) {
    const WeightVec up = act(ar, m.lift_reflection(i), m.lift_weight(lam));
    CHECK(m.restrict_weight(up) == rr.reflect(i, lam));
  }
}

TEST_CASE("symmetric quadrics eps images are 2 omega_i") {
  const AmbientModel m = AmbientModel::symmetric_quadrics(4);
  for (int i = 1; i <= 3; ++i) {
    const WeightVec e = m.eps_image(i);
    for (int j = 0; j < 3; ++j) CHECK(e.coords[j] == (j == i - 1 ? 2 : 0));
  }
}

}  // TEST_SUITE
