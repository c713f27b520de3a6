#include "smtkit/cartan.hpp"
#include "smtkit/quadlat.hpp"

#include <doctest.h>

#include <set>

using namespace smtkit;

namespace {

std::set<std::string> quadratic_names(const FinTypeLabel& l) {
  std::set<std::string> out;
  for (const auto& r : classify_quadratic(l))
    if (r.verdict.quadratic) out.insert(r.lattice.name);
  return out;
}

}  // namespace

TEST_SUITE("quadlat") {

TEST_CASE("Hermite normal form is upper triangular with reduced columns") {
  const auto h = hermite_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  REQUIRE(h.size() == 3);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
  // |det| of the input is 624
  CHECK(h[0][0] * h[1][1] * h[2][2] == 624);
}

TEST_CASE("number of intermediate lattices is the number of subgroups of P/Q") {
  CHECK(intermediate_lattices({Family::A, 1}).size() == 2);
  CHECK(intermediate_lattices({Family::A, 3}).size() == 3);  // Z/4
  CHECK(intermediate_lattices({Family::A, 5}).size() == 4);  // Z/6
  CHECK(intermediate_lattices({Family::B, 3}).size() == 2);
  CHECK(intermediate_lattices({Family::D, 4}).size() == 5);  // (Z/2)^2
  CHECK(intermediate_lattices({Family::E, 6}).size() == 2);
  CHECK(intermediate_lattices({Family::G, 2}).size() == 1);
}

TEST_CASE("indices in P") {
  CHECK(root_lattice({Family::A, 4}).index_in_weight_lattice() == 5);
  CHECK(root_lattice({Family::C, 3}).index_in_weight_lattice() == 2);
  CHECK(weight_lattice({Family::C, 3}).index_in_weight_lattice() == 1);
}

TEST_CASE("root lattice membership") {
  const SubLattice q = root_lattice({Family::A, 2});
  CHECK(q.contains(IntVec{2, -1}));
  CHECK(q.contains(IntVec{1, 1}));
  CHECK_FALSE(q.contains(IntVec{1, 0}));
}

TEST_CASE("classification for small ranks") {
  using S = std::set<std::string>;
  CHECK(quadratic_names({Family::A, 1}) == S{"P", "Q"});
  CHECK(quadratic_names({Family::A, 3}) == S{"P"});
  CHECK(quadratic_names({Family::B, 3}) == S{"Q"});
  CHECK(quadratic_names({Family::C, 3}) == S{"P"});
  CHECK(quadratic_names({Family::BC, 2}) == S{"P"});
  CHECK(quadratic_names({Family::G, 2}).empty());
  CHECK(quadratic_names({Family::D, 4}).empty());
}

TEST_CASE("a non-quadratic weight lattice carries a negative-height certificate") {
  for (const FinTypeLabel l : {FinTypeLabel{Family::D, 4}, FinTypeLabel{Family::G, 2}, FinTypeLabel{Family::F, 4}}) {
    const auto v = is_quadratic(weight_lattice(l), 6 * l.rank);
    CHECK_FALSE(v.quadratic);
    REQUIRE(v.negative_root.has_value());
  }
}

TEST_CASE("property: quadratic bases expand every dominant element with natural coefficients") {
  for (const FinTypeLabel l : {FinTypeLabel{Family::A, 3}, FinTypeLabel{Family::C, 3}, FinTypeLabel{Family::BC, 2}}) {
    const SubLattice p = weight_lattice(l);
    const auto v = is_quadratic(p, 6 * l.rank);
    REQUIRE(v.quadratic);
    // every dominant weight with coordinates up to 3: expansion over the basis is in N
    std::vector<int> c(l.rank, 0);
    for (;;) {
      WeightVec w = WeightVec::from_ints(p.generators.front().basis, c);
      if (p.contains(w)) {
        CAPTURE(to_string(w));
        const Rational h = hgt(w, v.basis);
        CHECK(is_integral(h));
        CHECK(h >= 0);
      }
      int k = 0;
      while (k < l.rank && ++c[k] > 3) c[k++] = 0;
      if (k == l.rank) break;
    }
    // simple roots have nonnegative height over the basis
    const GCM m = build_cartan(l);
    for (int i = 0; i < l.rank; ++i) {
      const Rational h = hgt(simple_root(m, i), v.basis);
      CHECK(h >= 0);
    }
  }
}

TEST_CASE("monoid of the root lattice of B_3 is free") {
  const auto rep = analyze_monoid(root_lattice({Family::B, 3}), 18);
  CHECK(rep.free);
  CHECK(rep.irreducibles.size() == 3);
}

TEST_CASE("monoid of the root lattice of A_2 is not free") {
  const auto rep = analyze_monoid(root_lattice({Family::A, 2}), 12);
  CHECK_FALSE(rep.free);
  CHECK(rep.witness.has_value());
}

TEST_CASE("dominant down sets below the quadratic basis") {
  for (const FinTypeLabel l : {FinTypeLabel{Family::A, 3}, FinTypeLabel{Family::B, 3}, FinTypeLabel{Family::C, 3},
                               FinTypeLabel{Family::BC, 3}}) {
    CAPTURE(l.name());
    const auto rep = check_quadratic_down_sets(l);
    CHECK_MESSAGE(rep.pass, rep.counterexample);
  }
}

TEST_CASE("dominant down set of the highest root of A_2") {
  const GCM m = build_cartan({Family::A, 2});
  const auto down = dominant_down_set(m, WeightVec::from_ints(m.id(), std::vector{1, 1}));
  CHECK(down.size() == 2);  // theta and 0
}

}  // TEST_SUITE
