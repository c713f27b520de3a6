#pragma once

// Weyl groups of symmetrizable GCMs acting on weights (with delta), cosets
// modulo the stabilizer of a dominant weight, Bruhat order, and Demazure
// characters.

#include "smtkit/cartan.hpp"
#include "smtkit/extend.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace smtkit {

using Word = std::vector<int>;  // leftmost letter first: w = s_{w[0]} s_{w[1]} ...

std::string word_to_string(std::span<const int> w);
Word parse_word(std::string_view text);  // "0,1,0" or "" for identity

// A GCM together with the delta coefficients of its simple roots.
class Realization {
 public:
  Realization() = default;
  explicit Realization(GCM m, QVector root_delta = {});
  static Realization of(const ExtendedDatum& d) { return Realization(d.extended, d.root_delta); }

  const GCM& gcm() const { return gcm_; }
  int rank() const { return gcm_.rank(); }
  const QVector& root_delta() const { return root_delta_; }
  const WeightVec& simple_root(int i) const { return roots_[i]; }
  WeightVec zero() const { return WeightVec::zero(gcm_.id(), rank()); }
  WeightVec rho() const;

  // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
  void reflect_in_place(int i, WeightVec& lambda) const;
  WeightVec reflect(int i, WeightVec lambda) const {
    reflect_in_place(i, lambda);
    return lambda;
  }
  std::optional<QVector> root_coordinates(const WeightVec& w) const;

 private:
  GCM gcm_;
  QVector root_delta_;
  std::vector<WeightVec> roots_;
};

struct WeylWord {
  std::string gcm_id;
  Word letters;
};

// Letters applied right to left.
WeightVec act(const Realization& r, std::span<const int> word, WeightVec lambda);

// Reduced word of the same element (acts on rho and descends).
Word reduce(const Realization& r, std::span<const int> word);
bool same_element(const Realization& r, std::span<const int> u, std::span<const int> v);
std::size_t length(const Realization& r, std::span<const int> word);

// Longest element of the parabolic subgroup on `nodes` (must be finite type).
Word longest_element(const Realization& r, std::span<const int> nodes);

// Word w of minimal length with w(dominant) = mu, found by descending through
// negative coordinates. Throws if no descent reaches a dominant weight within
// max_steps.
Word descend_to_dominant(const Realization& r, WeightVec mu, WeightVec* dominant_out = nullptr,
                         std::size_t max_steps = 100000);

// Cosets W / W_J where W_J is the stabilizer of a dominant base weight. Each
// coset is identified with its point w(base).
class CosetSpace {
 public:
  CosetSpace(Realization r, WeightVec base);

  const Realization& realization() const { return r_; }
  const WeightVec& base() const { return base_; }
  std::vector<int> parabolic() const;  // J: nodes where base has coordinate 0

  WeightVec point(std::span<const int> word) const { return act(r_, word, base_); }
  Word min_word(const WeightVec& pt) const;
  std::size_t length(const WeightVec& pt) const { return min_word(pt).size(); }
  // Bruhat order on cosets.
  bool leq(const WeightVec& u, const WeightVec& v) const;
  // All cosets <= v (subword folding), capped.
  std::vector<WeightVec> lower_interval(const WeightVec& v, std::size_t cap = 1000000) const;
  // If u < v with u = s_beta v for a positive real root beta, returns
  // n = <u, beta^vee> > 0 (u is the lower coset).
  std::optional<Integer> reflection_pairing(const WeightVec& u, const WeightVec& v) const;

 private:
  Realization r_;
  WeightVec base_;
};

struct CosetRep {
  WeylWord word;
  std::vector<int> parabolic;
};

// Finite Bruhat interval with covering relations.
struct CosetInterval {
  std::vector<WeightVec> points;                 // sorted by (length, weight)
  std::vector<std::size_t> lengths;
  std::map<WeightVec, std::size_t> index;
  // covers[v] = (u, n): u covered by v, n = reflection pairing
  std::vector<std::vector<std::pair<std::size_t, Integer>>> covers_below;
};

CosetInterval coset_interval(const CosetSpace& space, const WeightVec& top, std::size_t cap = 1000000);

// Demazure character: weight -> multiplicity.
using Character = std::map<WeightVec, Integer>;
Character demazure_character(const Realization& r, std::span<const int> word, const WeightVec& lambda);
Integer total_multiplicity(const Character& ch);

// tau^_m = s0 s1 ... s_{m-1} tau^_{m-1} on the restricted tier.
Word tau_hat(int m, const ExtendedDatum& d);
// The dominant-orbit representatives tau^_m(^e omega_0), m = 0..l.
std::vector<WeightVec> dominant_orbit_reps(const ExtendedDatum& d);
// Orbit of ^e omega_0 under s~_0 .. s~_{l-1} (a finite group of type C_l).
std::vector<WeightVec> small_orbit(const ExtendedDatum& d);

}  // namespace smtkit
