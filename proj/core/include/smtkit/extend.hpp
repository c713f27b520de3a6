#pragma once

// Extended Cartan matrices (one node added in front), label identification,
// and the two gradings on the restricted tier.

#include "smtkit/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smtkit {

enum class Tier { Ambient, Restricted };

struct ExtendedDatum {
  GCM base;
  WeightVec epsilon;  // over the fundamental weights of base
  GCM extended;       // node 0 first
  Tier tier = Tier::Ambient;
  GcmClass kind = GcmClass::Finite;
  // delta coefficient of each simple root of `extended` (nonzero only at
  // node 0, and only in affine type: 1 on the ambient tier, 2 on the
  // restricted tier where the new simple root is twice the ambient one)
  QVector root_delta;
  std::optional<FinTypeLabel> restricted_label;  // set on the restricted tier

  int rank() const { return extended.rank(); }    // l + 1
  int base_rank() const { return base.rank(); }   // l
};

// Node 0 row is -<eps, alpha^vee>; node 0 column is -1 wherever that is nonzero.
ExtendedDatum extend_ambient(const GCM& base, const WeightVec& eps);

// Restricted version: row 0 is -2<eps, alpha~^vee>. eps defaults to eps_1 of the
// quadratic basis (omega_1 for D). Supports A, B, C, D, BC.
ExtendedDatum extend_restricted(const FinTypeLabel& label, const std::optional<WeightVec>& eps = std::nullopt);

// perm[i] = node of b matched to node i of a, with a(i,j) == b(perm i, perm j).
std::optional<std::vector<int>> find_isomorphism(const GCM& a, const GCM& b);

// "C_3", "C_2^{(1)}", "A_4^{(2)}", "C_2+C_2", or "indefinite". Affine
// diagrams outside the stored tables come back as "affine".
std::string identify_label(const GCM& m);

// --- restricted tier gradings -------------------------------------------

// lambda = sum_i a_i ^e eps_i + gamma_coef * gamma + delta_coef * delta.
struct SplitWeight {
  QVector eps_coords;  // a_0 .. a_l
  Rational gamma = 0;
  Rational delta = 0;
};

// ^e omega_0 = omega~_0 / 2, and ^e eps_i (i = 0..l) as restricted-tier weights.
WeightVec eomega0(const ExtendedDatum& d);
WeightVec eeps(const ExtendedDatum& d, int i);

SplitWeight to_split(const ExtendedDatum& d, const WeightVec& lambda);
WeightVec from_split(const ExtendedDatum& d, const SplitWeight& s);

// <D, lambda>: the delta coordinate in affine type; in finite type the
// ambient alpha_0-coefficient, i.e. twice the coefficient of alpha~_0.
Rational d_pairing(const ExtendedDatum& d, const WeightVec& lambda);

// sum_{i>=1} i a_i + <D, lambda>.
Rational egr(const ExtendedDatum& d, const SplitWeight& s);
Rational egr(const ExtendedDatum& d, const WeightVec& lambda);
// sum_i i a_i for lambda = sum_i a_i eps_i (coefficients indexed from eps_1).
Rational gr(const QVector& eps_coeffs);

// 0 (affine) or (l+1)/2 (finite). Throws for indefinite.
Rational n0(const ExtendedDatum& d);

// Membership in Omega + Z gamma + Z delta.
bool in_spherical_lattice(const ExtendedDatum& d, const WeightVec& lambda);

}  // namespace smtkit
