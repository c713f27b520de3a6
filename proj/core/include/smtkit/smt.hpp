#pragma once

// Standard monomials: minuscule posets, a generic straightening engine for
// quadratic relations, the E_7 seed system, and graded counting identities
// for the implemented ambient models.

#include "smtkit/ambient.hpp"
#include "smtkit/lspath.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smtkit {

// ---------------------------------------------------------------- minuscule posets

// Weyl orbit of a minuscule fundamental weight, ordered as Bruhat order on
// cosets: i <= j iff weights[i] - weights[j] is an N-combination of simple
// roots. The highest weight is the minimum.
struct MinusculePoset {
  GCM gcm;
  int node = 0;
  std::vector<WeightVec> weights;  // sorted by depth, highest weight first
  std::vector<int> depth;          // height of highest - weight
  std::vector<std::vector<bool>> leq;

  std::size_t size() const { return weights.size(); }
  std::optional<std::size_t> index_of(const WeightVec& w) const;
  bool comparable(std::size_t i, std::size_t j) const { return leq[i][j] || leq[j][i]; }
  std::size_t minimum() const { return 0; }
  std::size_t maximum() const { return weights.size() - 1; }
};

// Throws std::invalid_argument unless m is of finite type and omega_node is
// minuscule.
MinusculePoset minuscule_poset(const GCM& m, int node);
MinusculePoset minuscule_poset(const FinTypeLabel& label, int node);

struct PairCounts {
  std::size_t comparable = 0;    // unordered pairs {f <= f'} including f == f'
  std::size_t incomparable = 0;  // one relation each
};
PairCounts count_standard_pairs(const MinusculePoset& p);

// ---------------------------------------------------------------- straightening

// Generator indices sorted ascending. Indices follow a linear extension of
// the partial order, so a sorted monomial is standard iff it is a chain.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rational>;

struct Generator {
  std::string id;
  int grade = 0;
};

struct RelationTerm {
  Rational coef;
  std::vector<std::string> mono;
};

struct Relation {
  std::string a, b;
  std::vector<RelationTerm> rhs;
};

enum class PairChoice { First, Last };

class StraighteningSystem {
 public:
  // order: pairs (a, b) meaning a < b; the transitive closure is taken.
  // Throws if the order has a cycle, a relation names an unknown or
  // comparable pair, or a relation term is not strictly smaller than ab.
  StraighteningSystem(std::vector<Generator> gens, const std::vector<std::pair<std::string, std::string>>& order,
                      const std::vector<Relation>& relations);

  std::size_t size() const { return gens_.size(); }
  const Generator& generator(int i) const { return gens_[i]; }
  int index(const std::string& id) const;  // throws on unknown id
  bool leq(int i, int j) const { return leq_[i][j]; }
  bool comparable(int i, int j) const { return leq_[i][j] || leq_[j][i]; }

  Monomial monomial(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids(const Monomial& m) const;
  int grade(const Monomial& m) const;
  bool is_standard(const Monomial& m) const;
  // Monomial order: grade, then degree, then the smallest generator whose
  // multiplicity differs (more copies of it means smaller).
  bool less(const Monomial& a, const Monomial& b) const;

  // Normal form over standard monomials. Throws std::runtime_error when an
  // incomparable pair has no relation.
  Poly straighten(const Monomial& m, PairChoice choice = PairChoice::First) const;
  Poly straighten(const Poly& p, PairChoice choice = PairChoice::First) const;

  // Standard monomials of a given degree (all grades).
  std::vector<Monomial> standard_monomials(int degree) const;

  const std::map<std::pair<int, int>, Poly>& relations() const { return rel_; }
  // Covering pairs of the order, as ids.
  std::vector<std::pair<std::string, std::string>> covers() const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> by_id_;
  std::vector<std::vector<bool>> leq_;
  std::map<std::pair<int, int>, Poly> rel_;
};

std::string to_string(const StraighteningSystem& s, const Poly& p);

// ---------------------------------------------------------------- E_7 seed

// E_7 as the extension of E_6 by omega_1; node k of the extension is node k
// of E_6 (Bourbaki, 1-based) and node 0 is the new node.
struct E7Data {
  ExtendedDatum datum;
  MinusculePoset poset;                     // orbit of omega_0, 56 weights
  std::map<std::string, std::size_t> label;  // x0..x5, y0..y5 -> poset index
  std::vector<int> grade;                   // alpha_0-coefficient of omega_0 - weight
};

E7Data e7_data();
// All 56 weights as generators ("x0".."y5" for the labelled ones, "w<i>"
// otherwise), the Bruhat covers, and the single seed relation on x5 y5.
StraighteningSystem e7_system(const E7Data& d);
// The twelve labelled generators and the seed relation only.
StraighteningSystem e7_seed_system(const E7Data& d);

// ---------------------------------------------------------------- counting identities

// LS-paths of shape n omega_0 below [tau_m]; with richardson, those whose
// smallest direction is not the identity coset.
std::size_t graded_count(const AmbientModel& model, int m, int n, bool richardson, EnumerationOptions opts = {});
// Sum over 0 <= i_1 <= ... <= i_n <= m (from 1 with richardson) of
// dim V(eps_{i_1} + ... + eps_{i_n}) on the finite ambient diagram.
Integer expected_count(const AmbientModel& model, int m, int n, bool richardson);

// Standard-from-above monomials of degree n in the degree-1 paths below
// [tau_m] (a chain count), optionally avoiding the identity path.
Integer standard_above_count(const AmbientModel& model, int m, int n, bool richardson, EnumerationOptions opts = {});

struct BelowReport {
  std::size_t candidates = 0;
  std::size_t standard = 0;
  // every standard-below monomial lifts to a monomial that is standard
  // from above after sorting
  bool lifts_standard = true;
  // degree-1 lifts equal the Richardson degree-1 paths as a set
  bool degree1_bijective = true;
};
// Monomials of degree n in typed paths of types 1..l, below-standardness
// tested by defining-sequence search.
BelowReport standard_below(const AmbientModel& model, int n, EnumerationOptions opts = {});

struct GradingBoundReport {
  std::size_t weights = 0;   // distinct endpoints examined
  std::size_t in_lattice = 0;
  Rational n0;
  Rational max_egr;
  bool bound_holds = true;
  bool equality_only_on_orbit = true;
};
// Degree-1 endpoints below [tau_l], restricted when split.
GradingBoundReport check_egr_bound(const AmbientModel& model, EnumerationOptions opts = {});

struct FiniteCaseReport {
  int rank = 0;
  bool tau_identity = false;        // act(tau, ^e omega_0) == ^e omega_0 - ^e eps_1
  std::size_t basis_size = 0;       // ambient minuscule orbit of omega_0
  std::size_t richardson_size = 0;  // interval below tau minus the identity coset
  bool richardson_matches = false;  // == basis minus min and max
  std::size_t restricted_orbit = 0; // restricted-tier orbit of ^e omega_0
};
// Flip model for SL(l+1) (restricted A_l).
FiniteCaseReport finite_case_structure(int l);

struct TauExperiment {
  std::string label;
  WeightVec tau_image;
  WeightVec predicted;  // 3 ^e omega_0 - ^e eps_l
  bool equal_mod_delta = false;
};
// Compares act(tau, ^e omega_0) with 3 ^e omega_0 - ^e eps_l on the
// restricted tier. Reported, not asserted.
TauExperiment tau_experiment(const FinTypeLabel& restricted);

}  // namespace smtkit
