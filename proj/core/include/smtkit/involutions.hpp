#pragma once

// Catalog of symmetric-space involutions (restricted type and isogeny per
// row), the quadratic verdict per row, and the restricted-to-ambient weight
// dictionary for the rows with an ambient model.

#include "smtkit/ambient.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smtkit {

enum class Isogeny { SC, ADJ, SC_ADJ };
std::string to_string(Isogeny i);
Isogeny parse_isogeny(std::string_view text);  // "SC", "ADJ", "SC=ADJ"

struct RestrictedForm {
  FinTypeLabel type;
  Isogeny isogeny = Isogeny::SC;
  friend bool operator==(const RestrictedForm&, const RestrictedForm&) = default;
};

struct InvolutionRecord {
  std::string name;
  std::string pattern;
  std::string ambient;
  std::string fixed_algebra;
  std::map<std::string, int> params;
  RestrictedForm restricted;
  // Other readings of the same row through low-rank coincidences (B_1 = A_1,
  // B_2 = C_2).
  std::vector<RestrictedForm> alternatives;
  std::optional<InvolutionKind> kind;  // set iff an ambient model exists
  std::optional<FinTypeLabel> flip_factor;
  int quadrics_n = 0;

  bool implemented() const { return kind.has_value(); }
};

// Integer expression over named parameters: + - * / % ( ), comparisons,
// && and ||. Comparisons yield 0 or 1. Throws std::invalid_argument.
long long evaluate_expression(std::string_view expr, const std::map<std::string, int>& vars);

class InvolutionCatalog {
 public:
  struct Case {
    std::string when;
    std::string family;
    std::string rank;
    std::string isogeny;
  };
  struct Row {
    std::string pattern;
    std::string requires_expr;
    std::string ambient;
    std::string fixed_algebra;
    std::string model_kind;  // "", "flip", "symmetric_quadrics"
    std::string model_family;
    std::string model_param;  // factor rank or n
    std::vector<Case> cases;
  };

  static InvolutionCatalog parse(std::string_view json_text);
  // The catalog shipped with the library.
  static const InvolutionCatalog& builtin();

  // Throws std::invalid_argument for unknown names or parameters outside a
  // row's range.
  InvolutionRecord lookup(std::string_view name) const;
  const std::vector<Row>& rows() const { return rows_; }
  // Every row instantiated with parameters in 1..max_param.
  std::vector<InvolutionRecord> instances(int max_param) const;

 private:
  std::optional<InvolutionRecord> instantiate(const Row& row, std::map<std::string, int> params) const;
  std::vector<Row> rows_;
};

AmbientModel ambient_model(const InvolutionRecord& rec);  // throws if not implemented
// Ambient dominant weights eps_1 .. eps_l on the finite ambient diagram.
std::vector<WeightVec> weight_map(const InvolutionRecord& rec);
// sum_i a_i * weight_map[i]; a has one entry per restricted node.
WeightVec restricted_to_ambient(const InvolutionRecord& rec, std::span<const Rational> a);

// Lattice chosen by isogeny (SC -> P, ADJ -> Q, SC=ADJ -> P) tested for the
// quadratic property. Restricted rank <= 5.
bool quadratic_verdict(const RestrictedForm& f);
// Closed-form rule: simply connected with A, BC or C, or adjoint with B.
bool quadratic_rule(const RestrictedForm& f);

}  // namespace smtkit
