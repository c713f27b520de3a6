#pragma once

// LS-paths of a dominant shape over a symmetrizable GCM: validation,
// enumeration below a coset, gradings, dominance, standardness from above and
// from below, and tensor multiplicities.

#include "smtkit/ambient.hpp"
#include "smtkit/weyl.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace smtkit {

// dirs are coset points x(shape), stored largest first: dirs[0] > dirs[1] > ...
// cuts = 0 = a_0 < a_1 < ... < a_r = 1 (size dirs.size() + 1).
struct LSPath {
  WeightVec shape;
  std::vector<WeightVec> dirs;
  std::vector<Rational> cuts;

  const WeightVec& max_dir() const { return dirs.front(); }
  const WeightVec& min_dir() const { return dirs.back(); }
  WeightVec endpoint() const;
  // pi(a_k) for k = 0..r
  std::vector<WeightVec> breakpoints() const;
  friend bool operator==(const LSPath&, const LSPath&) = default;
};

LSPath straight_path(const WeightVec& shape, const WeightVec& dir);

// Raised when a path could exist only with a cut denominator above the cap.
class DenominatorCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  int denominator_cap = 12;
  std::size_t interval_cap = 1000000;
  std::size_t path_cap = 5000000;
};

// Paths of one shape with max direction <= top. Holds the Bruhat interval and
// the a-chain reachability tables.
class PathModel {
 public:
  PathModel(const Realization& r, const WeightVec& shape, const WeightVec& top_point,
            EnumerationOptions opts = {});

  const CosetSpace& space() const { return space_; }
  const CosetInterval& interval() const { return interval_; }
  const WeightVec& shape() const { return shape_; }
  const std::vector<Rational>& candidate_cuts() const { return cuts_; }

  std::vector<LSPath> enumerate() const;
  std::size_t count() const;
  // Full chain-condition check for a candidate inside this interval.
  bool is_lspath(const LSPath& p) const;
  // Is there an a-chain from upper down to lower (strictly)?
  bool a_chain(const WeightVec& upper, const WeightVec& lower, const Rational& a) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  bool reach(std::size_t cut_index, std::size_t from, std::size_t to) const;
  template <class F>
  void walk(F&& emit) const;

  CosetSpace space_;
  WeightVec shape_;
  CosetInterval interval_;
  std::vector<Rational> cuts_;
  std::vector<std::vector<Bits>> reach_;  // reach_[cut][from] = bitset of lower nodes
  EnumerationOptions opts_;
};

// Validates a candidate from scratch (builds the interval below max_dir).
bool is_lspath(const Realization& r, const LSPath& p, EnumerationOptions opts = {});

// alpha_0-coefficient of shape - endpoint (the D-degree). Throws if not integral.
Integer d_degree(const Realization& r, const LSPath& p);

// <pi(t), alpha_i^vee> >= 0 for the given nodes at every breakpoint.
bool is_dominant_on(const LSPath& p, std::span<const int> nodes);

// Standard order from above: max_dir(pi) <= min_dir(eta).
bool path_leq(const CosetSpace& space, const LSPath& pi, const LSPath& eta);
bool is_standard_above(const CosetSpace& space, std::span<const LSPath> mono);

// --- standardness from below on a finite Weyl group -----------------------

// The finite Weyl group as points w(rho), with Bruhat order and the coset
// fibres x W_shape for each shape in use.
class FiniteWeylGroup {
 public:
  explicit FiniteWeylGroup(Realization r, std::size_t cap = 1000000);
  const Realization& realization() const { return r_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeightVec>& elements() const { return elements_; }  // points w(rho)
  bool leq(std::size_t u, std::size_t v) const { return leq_[u][v]; }
  // Elements w with w(shape) == point.
  std::vector<std::size_t> fibre(const WeightVec& shape, const WeightVec& point) const;
  WeightVec act_element(std::size_t w, const WeightVec& lambda) const;
  Word word(std::size_t w) const;

 private:
  Realization r_;
  std::vector<WeightVec> elements_;
  std::vector<std::vector<bool>> leq_;
};

// A path of type eps_index (1-based quadratic index) for the from-below rule.
struct TypedPath {
  int type = 0;
  LSPath path;
};

// True iff defining sequences exist that line up into one weakly increasing
// sequence, blocks ordered by increasing type and paths within a block in some
// order.
bool is_standard_below(const FiniteWeylGroup& w, std::span<const TypedPath> mono);

// --- flip lift -------------------------------------------------------------

// Path of shape eps_i on the finite ambient diagram (base GCM of the ambient
// datum) lifted to a path of shape omega_0 in the extended ambient.
LSPath lift_path(const AmbientModel& model, const TypedPath& p);

// --- tensor products -------------------------------------------------------

// Number of eta in B(lambda) with mu + eta(t) dominant and mu + eta(1) = nu.
Integer tensor_multiplicity(const GCM& m, const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu);

std::string to_string(const LSPath& p);

}  // namespace smtkit
