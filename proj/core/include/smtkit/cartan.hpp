#pragma once

// Generalized Cartan matrices and weights over fundamental-weight coordinates.
//
// Orientation: entries[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i
// written over the fundamental weights. Indices are 0-based; for extended
// matrices index 0 is the added node.

#include "smtkit/linalg.hpp"
#include "smtkit/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smtkit {

enum class Family { A, B, C, D, E, F, G, BC };

struct FinTypeLabel {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "C_3", "E_7", "BC_1"
  // "C3", "C_3", "E7", "BC_2". Throws std::invalid_argument.
  static FinTypeLabel parse(std::string_view text);
  static Family parse_family(std::string_view text);
  bool reduced() const { return family != Family::BC; }
  friend bool operator==(const FinTypeLabel&, const FinTypeLabel&) = default;
};

bool is_valid(const FinTypeLabel& label);
std::string family_name(Family f);

using IntMatrix = std::vector<std::vector<int>>;

bool is_gcm(const IntMatrix& m);

class GCM {
 public:
  GCM() = default;
  // Throws std::invalid_argument unless the GCM axioms hold.
  explicit GCM(IntMatrix entries, std::vector<int> nonreduced = {}, std::string id = {});

  int rank() const { return static_cast<int>(entries_.size()); }
  int operator()(int i, int j) const { return entries_[i][j]; }
  const IntMatrix& entries() const { return entries_; }
  const std::vector<int>& nonreduced() const { return nonreduced_; }
  const std::string& id() const { return id_; }
  GCM with_id(std::string id) const;

  // Principal submatrix on the given nodes, in the given order.
  GCM principal(std::span<const int> nodes, std::string id = {}) const;
  // Connected components of the Dynkin graph (sorted node lists).
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const GCM& a, const GCM& b) {
    return a.entries_ == b.entries_ && a.nonreduced_ == b.nonreduced_;
  }

 private:
  IntMatrix entries_;
  std::vector<int> nonreduced_;
  std::string id_;
};

GCM direct_sum(const GCM& a, const GCM& b, std::string id = {});

// Exact weight: coordinates over the fundamental weights of `basis`, plus delta.
struct WeightVec {
  std::string basis;
  QVector coords;
  Rational delta = 0;

  static WeightVec zero(std::string basis, int n);
  static WeightVec fundamental(std::string basis, int n, int i);
  static WeightVec from_ints(std::string basis, std::span<const int> c, int delta = 0);

  int size() const { return static_cast<int>(coords.size()); }
  // <lambda, alpha_i^vee>; delta pairs to zero with every simple coroot.
  const Rational& pairing(int i) const { return coords[i]; }
  bool is_zero() const;
  bool is_integral() const;  // all coords and delta integral
  bool is_dominant() const;  // all coords >= 0

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  WeightVec& operator*=(const Rational& s);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(const Rational& s, WeightVec a) { return a *= s; }
  friend WeightVec operator-(WeightVec a) { return a *= Rational(-1); }

  friend bool operator==(const WeightVec& a, const WeightVec& b) {
    return a.coords == b.coords && a.delta == b.delta;
  }
  // Lexicographic on (coords, delta); basis ignored. Used for ordered containers.
  friend bool operator<(const WeightVec& a, const WeightVec& b) {
    if (a.coords != b.coords) return a.coords < b.coords;
    return a.delta < b.delta;
  }
};

std::string to_string(const WeightVec& w);

// Bourbaki-numbered Cartan matrix. BC_l is the B_l shape with the last node
// marked nonreduced. D is accepted from rank 4.
GCM build_cartan(const FinTypeLabel& label);

// "C_n^{(1)}", "A_{2n}^{(2)}", "A_{2n-1}^{(2)}", plus "A_n^{(1)}", "B_n^{(1)}",
// "D_n^{(1)}", "D_{n+1}^{(2)}" for labelling ambient diagrams. Node 0 first,
// oriented so that <alpha_i, alpha_0^vee> is 0 or -1 for the node next to 0
// whenever the family allows it. Accepts "C2^(1)" style too.
GCM build_affine_cartan(std::string_view name);

std::optional<QVector> symmetrizer(const GCM& m);
QMatrix symmetrized(const GCM& m, const QVector& d);

enum class GcmClass { Finite, Affine, Indefinite };
std::string to_string(GcmClass c);
// Throws std::invalid_argument for non-symmetrizable input.
GcmClass classify(const GCM& m);

// alpha_i over fundamental weights, with delta coefficient from root_delta
// (empty span means 0).
WeightVec simple_root(const GCM& m, int i, std::span<const Rational> root_delta = {});

// Coefficients of w over the simple roots. For singular m the delta
// coordinate is needed; throws std::invalid_argument("need delta coordinate")
// when root_delta is empty. nullopt if w is outside the root span.
std::optional<QVector> root_coordinates(const GCM& m, const WeightVec& w,
                                        std::span<const Rational> root_delta = {});

// True iff mu - lambda is an N-combination of simple roots.
bool dominant_leq(const WeightVec& lambda, const WeightVec& mu, const GCM& m,
                  std::span<const Rational> root_delta = {});

// Positive roots of a finite reduced-type GCM in simple-root coordinates.
std::vector<std::vector<int>> positive_roots(const GCM& m);
// Coroot of a root (simple-root coords) in simple-coroot coords.
QVector coroot_coordinates(const GCM& m, std::span<const int> root);

// Weyl dimension formula. m must be finite type without a nonreduced marker.
Integer weyl_dim(const GCM& m, const WeightVec& lambda);
Integer weyl_dim(const FinTypeLabel& label, const WeightVec& lambda);

// Quadratic basis eps_1..eps_l for A, B, C, BC (GCM coordinates: for BC the
// last vector has coordinate 2, the doubled-root convention).
std::vector<WeightVec> quadratic_basis(const FinTypeLabel& label);
// q_i with eps_i = q_i * omega_i in GCM coordinates.
std::vector<int> quadratic_multipliers(const FinTypeLabel& label);

}  // namespace smtkit
