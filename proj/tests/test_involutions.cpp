#include "smtkit/involutions.hpp"

#include <doctest.h>

#include <set>

using namespace smtkit;

TEST_SUITE("involutions") {

TEST_CASE("expression evaluator") {
  const std::map<std::string, int> v{{"n", 7}, {"k", 2}, {"m", 6}};
  CHECK(evaluate_expression("n - 1", v) == 6);
  CHECK(evaluate_expression("(m - 2) / 2", v) == 2);
  CHECK(evaluate_expression("m % 2 == 0 && m >= 4", v) == 1);
  CHECK(evaluate_expression("n > 2 * k || k == 0", v) == 1);
  CHECK(evaluate_expression("!(n == 7)", v) == 0);
  CHECK(evaluate_expression("-k + 3 * (n - k)", v) == 13);
  CHECK(evaluate_expression("1 + 2 * 3 - 4 / 2", v) == 5);
  CHECK(evaluate_expression("n != 7", v) == 0);
  CHECK(evaluate_expression("k <= 2 && k < 3", v) == 1);
  CHECK_THROWS_AS(evaluate_expression("q + 1", v), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression("(n + 1", v), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_expression("n / 0", v), std::invalid_argument);
}

TEST_CASE("isogeny names roundtrip") {
  for (const Isogeny i : {Isogeny::SC, Isogeny::ADJ, Isogeny::SC_ADJ}) CHECK(parse_isogeny(to_string(i)) == i);
  CHECK_THROWS(parse_isogeny("XYZ"));
}

TEST_CASE("lookups") {
  const auto& cat = InvolutionCatalog::builtin();
  const auto sp4 = cat.lookup("flip-sp4");
  CHECK(sp4.restricted.type == FinTypeLabel{Family::C, 2});
  CHECK(sp4.restricted.isogeny == Isogeny::SC);
  CHECK(sp4.implemented());
  REQUIRE(sp4.alternatives.size() == 1);
  CHECK(sp4.alternatives[0].type == FinTypeLabel{Family::B, 2});

  const auto gr = cat.lookup("grassmannian-sl7-2");
  CHECK(gr.restricted.type == FinTypeLabel{Family::BC, 2});
  CHECK(gr.restricted.isogeny == Isogeny::SC_ADJ);
  CHECK_FALSE(gr.implemented());

  CHECK(cat.lookup("grassmannian-sl6-3").restricted.type == FinTypeLabel{Family::C, 3});
  CHECK(cat.lookup("grassmannian-so9-3").restricted.type == FinTypeLabel{Family::B, 3});
  CHECK(cat.lookup("e7-e6").restricted.type == FinTypeLabel{Family::C, 3});
  CHECK(cat.lookup("symmetric-quadrics-sl4").quadrics_n == 4);

  CHECK_THROWS_AS(cat.lookup("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(cat.lookup("flip-sp5"), std::invalid_argument);
  CHECK_THROWS_AS(cat.lookup("flip-sl1"), std::invalid_argument);
}

TEST_CASE("property: closed-form rule agrees with the lattice computation on every catalog instance") {
  std::set<std::pair<std::string, Isogeny>> seen;
  std::size_t checked = 0;
  for (const auto& rec : InvolutionCatalog::builtin().instances(10)) {
    std::vector<RestrictedForm> forms{rec.restricted};
    forms.insert(forms.end(), rec.alternatives.begin(), rec.alternatives.end());
    for (const auto& f : forms) {
      if (f.type.rank > 5 || !seen.insert({f.type.name(), f.isogeny}).second) continue;
      INFO(rec.name, " ", f.type.name(), " ", to_string(f.isogeny));
      CHECK(quadratic_verdict(f) == quadratic_rule(f));
      ++checked;
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("low-rank alternatives agree with the primary reading") {
  for (const auto& rec : InvolutionCatalog::builtin().instances(8))
    for (const auto& alt : rec.alternatives) {
      if (rec.restricted.type.rank > 5) continue;
      CAPTURE(rec.name);
      CHECK(quadratic_rule(alt) == quadratic_rule(rec.restricted));
    }
}

TEST_CASE("weight map of the flip doubles each restricted weight") {
  const auto rec = InvolutionCatalog::builtin().lookup("flip-sl3");
  const auto wm = weight_map(rec);
  REQUIRE(wm.size() == 2);
  CHECK(wm[0].coords == QVector{1, 0, 1, 0});
  CHECK(wm[1].coords == QVector{0, 1, 0, 1});
  const QVector a{2, 1};
  CHECK(restricted_to_ambient(rec, a).coords == QVector{2, 1, 2, 1});
}

TEST_CASE("ambient models built from catalog rows") {
  const auto& cat = InvolutionCatalog::builtin();
  CHECK(ambient_model(cat.lookup("flip-so7")).factor() == FinTypeLabel{Family::B, 3});
  CHECK(ambient_model(cat.lookup("symmetric-quadrics-sl3")).kind() == InvolutionKind::SymmetricQuadrics);
  CHECK_THROWS(ambient_model(cat.lookup("e6-f4")));
}

TEST_CASE("catalog parser rejects malformed input") {
  CHECK_THROWS(InvolutionCatalog::parse("{"));
  CHECK_THROWS(InvolutionCatalog::parse(R"({"families": [{"pattern": "x{n}"}]})"));
}

}  // TEST_SUITE
