#include "io.hpp"
#include "verify.hpp"

#include "smtkit/extend.hpp"

#include <doctest.h>

#include <fstream>

using namespace smtkit;
using io::json;

TEST_SUITE("io") {

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
  CHECK(io::to_json(Rational(2)) == "2");
  CHECK(io::rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(io::rational_from_json(json(7)) == 7);
  CHECK_THROWS(io::rational_from_json(json(1.5)));
  // large integers fall back to strings
  Integer big = 1;
  for (int i = 0; i < 80; ++i) big *= 2;
  CHECK(io::to_json(big).is_string());
  CHECK(io::to_json(Integer(42)) == 42);
}

TEST_CASE("weights roundtrip") {
  WeightVec w = WeightVec::from_ints("C_2", std::vector{1, -2}, 3);
  w.coords[0] = Rational(1, 2);
  CHECK(io::weight_from_json(io::to_json(w), "C_2") == w);
}

TEST_CASE("GCM inputs") {
  CHECK(io::gcm_from_json(json{{"type", "C3"}}).gcm.entries() == build_cartan({Family::C, 3}).entries());
  CHECK(io::gcm_from_json(json{{"affine", "C_2^{(1)}"}}).gcm.rank() == 3);
  const auto input = io::gcm_from_json(json{{"entries", {{2, -1}, {-1, 2}}}, {"root_delta", {"1", "0"}}});
  CHECK(input.gcm.rank() == 2);
  CHECK(input.root_delta == QVector{1, 0});
  const GCM m = build_cartan({Family::BC, 2});
  const auto back = io::gcm_from_json(io::to_json(m));
  CHECK(back.gcm == m);
}

TEST_CASE("LS-paths roundtrip through JSON") {
  const ExtendedDatum d = extend_restricted({Family::C, 2});
  const Realization r = Realization::of(d);
  const WeightVec shape = WeightVec::fundamental(d.extended.id(), d.rank(), 0);
  for (const auto& p : PathModel(r, shape, act(r, Word{0, 1, 0}, shape)).enumerate()) {
    const json j = io::to_json(r, p);
    CHECK(io::path_from_json(r, json::parse(j.dump())) == p);
  }
}

TEST_CASE("relation systems roundtrip through JSON") {
  const StraighteningSystem s = e7_seed_system(e7_data());
  const StraighteningSystem back = io::system_from_json(json::parse(io::to_json(s).dump()));
  CHECK(back.size() == s.size());
  const Monomial m = back.monomial({"x5", "y5"});
  CHECK(to_string(back, back.straighten(m)) == to_string(s, s.straighten(s.monomial({"x5", "y5"}))));
}

TEST_CASE("the shipped E_7 relation file matches the generated system") {
  std::ifstream in(std::string(SMTKIT_DATA_DIR) + "/e7.json");
  REQUIRE(in);
  const json shipped = json::parse(in);
  CHECK(shipped == io::to_json(e7_system(e7_data())));
}

TEST_CASE("polynomials are written largest term first") {
  const StraighteningSystem s = e7_seed_system(e7_data());
  const json p = io::to_json(s, s.straighten(s.monomial({"x5", "y5"})));
  REQUIRE(p.size() == 5);
  CHECK(p[0]["mono"] == json{"x4", "y4"});
  CHECK(p[4]["mono"] == json{"x0", "y0"});
  CHECK(p[1]["coef"] == "-1");
}

TEST_CASE("integer lists") {
  CHECK(io::parse_int_list("1,0,-2") == std::vector<int>{1, 0, -2});
  CHECK(io::parse_int_list("").empty());
  CHECK_THROWS(io::parse_int_list("1,a"));
}

TEST_CASE("verify output is deterministic without timing") {
  verify::Options o;
  const auto a = verify::to_json(verify::run("extended-diagrams", o));
  const auto b = verify::to_json(verify::run("extended-diagrams", o));
  CHECK(a.dump() == b.dump());
  CHECK_FALSE(a.contains("seconds"));
  CHECK(verify::to_json(verify::run(1, o), true).contains("seconds"));
  CHECK_THROWS_AS(verify::run("no-such-check", o), std::invalid_argument);
}

}  // TEST_SUITE
