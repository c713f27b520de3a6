#pragma once

// Ambient tier for the two implemented involution families: the flip
// G = H x H, sigma(x, y) = (y, x), and symmetric quadrics in SL(n), where sigma
// acts on the diagram by alpha -> -alpha. Holds the extended ambient matrix,
// the node fibres over the restricted diagram, and the dictionary between
// sigma-split ambient weights and restricted weights.

#include "smtkit/cartan.hpp"
#include "smtkit/extend.hpp"
#include "smtkit/weyl.hpp"

#include <optional>
#include <vector>

namespace smtkit {

enum class InvolutionKind { Flip, SymmetricQuadrics };

class AmbientModel {
 public:
  // H of type A, B or C; the restricted type is the type of H.
  static AmbientModel flip(const FinTypeLabel& h);
  // SL(n), n >= 2; restricted type A_{n-1}.
  static AmbientModel symmetric_quadrics(int n);

  InvolutionKind kind() const { return kind_; }
  // Restricted label (H for the flip, A_{n-1} for quadrics).
  const FinTypeLabel& factor() const { return h_; }
  const ExtendedDatum& restricted() const { return restricted_; }
  const ExtendedDatum& ambient() const { return ambient_; }
  int rank() const { return h_.rank; }  // l

  // Ambient nodes over restricted node i: {0} for i = 0; {i, i + l} for the
  // flip, {i} for quadrics.
  const std::vector<int>& fibre(int i) const { return fibres_.at(i); }
  int partner(int ambient_node) const { return partner_.at(ambient_node); }

  // c_a == c_partner(a) for every ambient node.
  bool is_split(const WeightVec& ambient_weight) const;
  // Restricted coordinate i = (sum of fibre coordinates) / 2; delta unchanged.
  std::optional<WeightVec> restrict_weight(const WeightVec& ambient_weight) const;
  WeightVec lift_weight(const WeightVec& restricted_weight) const;
  // sigma on ambient weights: c_a -> -c_partner(a), delta -> -delta.
  WeightVec sigma(const WeightVec& ambient_weight) const;

  // Longest element of the fibre's Weyl group; acts on split weights as s~_i.
  Word lift_reflection(int i) const;
  Word lift_word(std::span<const int> restricted_word) const;

  // Image of eps_i (i = 1..l) as a dominant weight of the finite ambient
  // diagram (no node 0): (q_i w_i, q_i w_i) for the flip, 2 w_i for quadrics.
  WeightVec eps_image(int i) const;
  // Same weight placed in the extended ambient coordinates (node 0 coord 0).
  WeightVec eps_image_extended(int i) const;
  // Restricted simple roots rebuilt from ambient ones: row i is the
  // restriction of alpha_a - sigma(alpha_a), a in fibre(i).
  GCM reduced_cartan() const;
  QVector reduced_root_delta() const;
  // Finite ambient nodes 1..rank(base).
  std::vector<int> finite_nodes() const;
  // tau^_m and tau_m = w_Delta tau^_m as ambient words.
  Word tau_hat(int m) const;
  Word tau(int m) const;

 private:
  AmbientModel() = default;
  void finish(GCM base, WeightVec eps);

  InvolutionKind kind_ = InvolutionKind::Flip;
  FinTypeLabel h_;
  ExtendedDatum restricted_;
  ExtendedDatum ambient_;
  std::vector<std::vector<int>> fibres_;
  std::vector<int> partner_;
};

// tau_m = w_Delta tau^_m on the restricted tier (w_Delta on nodes 1..l).
Word restricted_tau(const ExtendedDatum& d, int m);

}  // namespace smtkit
