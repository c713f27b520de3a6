#include "oracle.hpp"

#include "smtkit/cartan.hpp"
#include "smtkit/linalg.hpp"

#include <doctest.h>

using namespace smtkit;

TEST_SUITE("cartan") {

TEST_CASE("B and C differ by the position of the double bond") {
  const GCM b = build_cartan({Family::B, 3});
  const GCM c = build_cartan({Family::C, 3});
  CHECK(b(1, 2) == -2);
  CHECK(b(2, 1) == -1);
  CHECK(c(2, 1) == -2);
  CHECK(c(1, 2) == -1);
  CHECK(transpose(to_qmatrix(b.entries())) == to_qmatrix(c.entries()));
}

TEST_CASE("BC is B-shaped with the last node doubled") {
  const GCM bc = build_cartan({Family::BC, 2});
  CHECK(bc.entries() == build_cartan({Family::B, 2}).entries());
  CHECK(bc.nonreduced() == std::vector<int>{1});
}

TEST_CASE("rank constraints") {
  CHECK(is_valid({Family::A, 1}));
  CHECK(is_valid({Family::B, 1}));
  CHECK(is_valid({Family::BC, 1}));
  CHECK_FALSE(is_valid({Family::C, 1}));
  CHECK_FALSE(is_valid({Family::D, 3}));
  CHECK(is_valid({Family::D, 4}));
  CHECK_FALSE(is_valid({Family::E, 5}));
  CHECK_FALSE(is_valid({Family::E, 9}));
  CHECK(is_valid({Family::E, 8}));
  CHECK_FALSE(is_valid({Family::F, 3}));
  CHECK_FALSE(is_valid({Family::G, 3}));
  CHECK_THROWS(build_cartan({Family::D, 3}));
}

TEST_CASE("label parsing roundtrip") {
  for (const auto* name : {"A_1", "B_4", "C_3", "D_5", "E_7", "F_4", "G_2", "BC_2"}) {
    const FinTypeLabel l = FinTypeLabel::parse(name);
    CHECK(l.name() == name);
  }
  CHECK(FinTypeLabel::parse("C3") == FinTypeLabel{Family::C, 3});
  CHECK_THROWS(FinTypeLabel::parse("Q_2"));
}

TEST_CASE("every finite Cartan matrix is a GCM of finite type with positive determinant") {
  for (const auto* name : {"A_1", "A_4", "B_2", "B_5", "C_4", "D_4", "D_6", "E_6", "E_7", "E_8", "F_4", "G_2"}) {
    CAPTURE(name);
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    CHECK(is_gcm(m.entries()));
    CHECK(classify(m) == GcmClass::Finite);
    CHECK(determinant(to_qmatrix(m.entries())) > 0);
    CHECK(symmetrizer(m).has_value());
  }
}

TEST_CASE("determinants equal |P/Q|") {
  CHECK(determinant(to_qmatrix(build_cartan({Family::A, 4}).entries())) == 5);
  CHECK(determinant(to_qmatrix(build_cartan({Family::B, 3}).entries())) == 2);
  CHECK(determinant(to_qmatrix(build_cartan({Family::C, 3}).entries())) == 2);
  CHECK(determinant(to_qmatrix(build_cartan({Family::D, 5}).entries())) == 4);
  CHECK(determinant(to_qmatrix(build_cartan({Family::E, 6}).entries())) == 3);
  CHECK(determinant(to_qmatrix(build_cartan({Family::E, 7}).entries())) == 2);
  CHECK(determinant(to_qmatrix(build_cartan({Family::E, 8}).entries())) == 1);
}

TEST_CASE("affine matrices are affine with a null vector") {
  for (const auto* name : {"A_2^{(1)}", "C_2^{(1)}", "C_3^{(1)}", "A_2^{(2)}", "A_4^{(2)}", "A_7^{(2)}"}) {
    CAPTURE(name);
    const GCM m = build_affine_cartan(name);
    CHECK(classify(m) == GcmClass::Affine);
    CHECK(determinant(to_qmatrix(m.entries())) == 0);
    CHECK(nullspace(to_qmatrix(m.entries())).size() == 1);
  }
}

TEST_CASE("an indefinite matrix is classified as such") {
  const GCM m(IntMatrix{{2, -3}, {-3, 2}});
  CHECK(classify(m) == GcmClass::Indefinite);
}

TEST_CASE("symmetrizer makes D A symmetric") {
  for (const auto* name : {"B_3", "C_4", "F_4", "G_2", "BC_2"}) {
    const GCM m = build_cartan(FinTypeLabel::parse(name));
    const auto d = symmetrizer(m);
    REQUIRE(d);
    const QMatrix s = symmetrized(m, *d);
    CHECK(s == transpose(s));
  }
}

TEST_CASE("Weyl dimension formula against independent oracles") {
  SUBCASE("SL(n) product formula") {
    for (const std::vector<int> lam : {std::vector<int>{1, 0, 0}, {0, 1, 0}, {2, 1, 0}, {1, 1, 1}, {0, 3, 2}}) {
      const GCM a3 = build_cartan({Family::A, 3});
      CHECK(weyl_dim(a3, WeightVec::from_ints(a3.id(), lam)) == oracle::sl_dim(lam));
    }
  }
  SUBCASE("characters by Demazure operators") {
    for (const auto* name : {"B_2", "C_3", "G_2", "B_3", "D_4"}) {
      const GCM m = build_cartan(FinTypeLabel::parse(name));
      std::vector<int> lam(m.rank(), 0);
      lam[0] = 1;
      lam.back() = 1;
      const WeightVec w = WeightVec::from_ints(m.id(), lam);
      CAPTURE(name);
      CHECK(weyl_dim(m, w) == oracle::dimension(oracle::character(m, w)));
    }
  }
  SUBCASE("classical values") {
    CHECK(weyl_dim(FinTypeLabel{Family::C, 2}, WeightVec::from_ints("C_2", std::vector{1, 0})) == 4);
    CHECK(weyl_dim(FinTypeLabel{Family::C, 2}, WeightVec::from_ints("C_2", std::vector{0, 1})) == 5);
    CHECK(weyl_dim(FinTypeLabel{Family::G, 2}, WeightVec::from_ints("G_2", std::vector{1, 0})) == 7);
    CHECK(weyl_dim(FinTypeLabel{Family::G, 2}, WeightVec::from_ints("G_2", std::vector{0, 1})) == 14);
    CHECK(weyl_dim(FinTypeLabel{Family::E, 7}, WeightVec::from_ints("E_7", std::vector{0, 0, 0, 0, 0, 0, 1})) == 56);
    CHECK(weyl_dim(FinTypeLabel{Family::E, 8}, WeightVec::from_ints("E_8", std::vector{0, 0, 0, 0, 0, 0, 0, 1})) == 248);
  }
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(build_cartan({Family::A, 4})).size() == 10);
  CHECK(positive_roots(build_cartan({Family::B, 3})).size() == 9);
  CHECK(positive_roots(build_cartan({Family::G, 2})).size() == 6);
  CHECK(positive_roots(build_cartan({Family::E, 6})).size() == 36);
  CHECK(positive_roots(build_cartan({Family::F, 4})).size() == 24);
}

TEST_CASE("quadratic basis spans the weight lattice with the stated multipliers") {
  for (const auto* name : {"A_3", "B_3", "C_3", "BC_3"}) {
    CAPTURE(name);
    const auto l = FinTypeLabel::parse(name);
    const auto basis = quadratic_basis(l);
    REQUIRE(basis.size() == 3);
    // triangular: eps_i involves only omega_1 .. omega_i
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK(basis[i].coords[j] == 0);
    CHECK(quadratic_multipliers(l).size() == 3);
  }
}

TEST_CASE("direct sums are block diagonal") {
  const GCM a = build_cartan({Family::A, 2}), c = build_cartan({Family::C, 2});
  const GCM s = direct_sum(a, c);
  CHECK(s.rank() == 4);
  CHECK(s(0, 2) == 0);
  CHECK(s(3, 2) == -2);
  CHECK(s.components().size() == 2);
}

}  // TEST_SUITE
