#pragma once

// JSON conversions shared by the command-line tool and the tests. Rationals
// are "p/q" strings; maps are emitted with sorted keys (nlohmann::json's
// default object type is ordered by key).

#include "smtkit/lspath.hpp"
#include "smtkit/smt.hpp"
#include "smtkit/weyl.hpp"

#include <json.hpp>

#include <string>

namespace smtkit::io {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const Integer& z);
json to_json(const QVector& v);
json to_json(const WeightVec& w);
json to_json(const GCM& m);
json to_json(const Character& ch);

Rational rational_from_json(const json& j);  // "p/q" string or integer
// array, or {"basis", "coords", "delta"}; a stored basis wins over the argument
WeightVec weight_from_json(const json& j, const std::string& basis);

// {"type": "C3"} | {"affine": "C_2^{(1)}"} | {"entries": [[...]], "nonreduced": [...]},
// optionally with "root_delta".
struct GcmInput {
  GCM gcm;
  QVector root_delta;
};
GcmInput gcm_from_json(const json& j);

// Path JSON: shape coordinates, directions as minimal words, cuts as strings.
json to_json(const Realization& r, const LSPath& p);
LSPath path_from_json(const Realization& r, const json& j);

// Relation-file schema: generators (id, grade), order pairs, relations with
// pair and rhs terms.
json to_json(const StraighteningSystem& s);
StraighteningSystem system_from_json(const json& j);
json to_json(const StraighteningSystem& s, const Poly& p);

// "1,0,2" -> integers; empty string -> empty vector.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace smtkit::io
