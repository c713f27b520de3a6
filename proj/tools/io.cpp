#include "io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace smtkit::io {

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return z.convert_to<long long>();
  return to_string(z);
}

json to_json(const QVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

json to_json(const WeightVec& w) {
  return json{{"basis", w.basis}, {"coords", to_json(w.coords)}, {"delta", to_json(w.delta)}};
}

json to_json(const GCM& m) {
  return json{{"rank", m.rank()}, {"id", m.id()}, {"entries", m.entries()}, {"nonreduced", m.nonreduced()}};
}

json to_json(const Character& ch) {
  json a = json::array();
  for (const auto& [w, mult] : ch) a.push_back(json{{"weight", to_json(w)}, {"mult", to_json(mult)}});
  return a;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

WeightVec weight_from_json(const json& j, const std::string& basis) {
  WeightVec w;
  w.basis = j.is_object() ? j.value("basis", basis) : basis;
  const json& c = j.is_object() ? j.at("coords") : j;
  for (const auto& x : c) w.coords.push_back(rational_from_json(x));
  if (j.is_object() && j.contains("delta")) w.delta = rational_from_json(j.at("delta"));
  return w;
}

GcmInput gcm_from_json(const json& j) {
  GcmInput s;
  if (j.contains("type")) {
    s.gcm = build_cartan(FinTypeLabel::parse(j.at("type").get<std::string>()));
  } else if (j.contains("affine")) {
    s.gcm = build_affine_cartan(j.at("affine").get<std::string>());
  } else {
    auto entries = j.at("entries").get<IntMatrix>();
    std::vector<int> nonreduced = j.value("nonreduced", std::vector<int>{});
    s.gcm = GCM(std::move(entries), std::move(nonreduced), j.value("id", std::string("gcm")));
  }
  if (j.contains("root_delta"))
    for (const auto& x : j.at("root_delta")) s.root_delta.push_back(rational_from_json(x));
  return s;
}

json to_json(const Realization& r, const LSPath& p) {
  CosetSpace space(r, p.shape);
  json dirs = json::array();
  for (const auto& x : p.dirs) dirs.push_back(space.min_word(x));
  json cuts = json::array();
  for (const auto& a : p.cuts) cuts.push_back(to_json(a));
  return json{{"shape", to_json(p.shape.coords)}, {"dirs", dirs}, {"cuts", cuts}};
}

LSPath path_from_json(const Realization& r, const json& j) {
  LSPath p;
  p.shape = weight_from_json(j.at("shape"), r.gcm().id());
  for (const auto& w : j.at("dirs")) p.dirs.push_back(act(r, w.get<Word>(), p.shape));
  for (const auto& a : j.at("cuts")) p.cuts.push_back(rational_from_json(a));
  return p;
}

json to_json(const StraighteningSystem& s) {
  json gens = json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    gens.push_back(json{{"id", s.generator(static_cast<int>(i)).id}, {"grade", s.generator(static_cast<int>(i)).grade}});
  json order = json::array();
  for (const auto& [a, b] : s.covers()) order.push_back(json::array({a, b}));
  json rels = json::array();
  for (const auto& [pair, poly] : s.relations()) {
    rels.push_back(json{{"pair", json::array({s.generator(pair.first).id, s.generator(pair.second).id})},
                        {"rhs", to_json(s, poly)}});
  }
  return json{{"generators", gens}, {"order", order}, {"relations", rels}};
}

StraighteningSystem system_from_json(const json& j) {
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) gens.push_back({g.at("id").get<std::string>(), g.value("grade", 0)});
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& o : j.at("order")) order.emplace_back(o.at(0).get<std::string>(), o.at(1).get<std::string>());
  std::vector<Relation> rels;
  for (const auto& r : j.value("relations", json::array())) {
    Relation rel{r.at("pair").at(0).get<std::string>(), r.at("pair").at(1).get<std::string>(), {}};
    for (const auto& t : r.at("rhs"))
      rel.rhs.push_back({rational_from_json(t.at("coef")), t.at("mono").get<std::vector<std::string>>()});
    rels.push_back(std::move(rel));
  }
  return StraighteningSystem(std::move(gens), order, rels);
}

json to_json(const StraighteningSystem& s, const Poly& p) {
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return s.less(b.first, a.first); });
  json a = json::array();
  for (const auto& [m, c] : terms) a.push_back(json{{"coef", to_json(c)}, {"mono", s.ids(m)}});
  return a;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace smtkit::io
