#pragma once

// Sublattices Q <= L <= P of a finite root system: freeness of the dominant
// monoid, the quadratic condition, and the classification over P/Q.

#include "smtkit/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smtkit {

using IntVec = std::vector<long long>;

// Hermite normal form of the row lattice (rows in upper echelon form, positive
// pivots, entries above pivots reduced). Zero rows dropped.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);

struct SubLattice {
  FinTypeLabel ambient;
  std::string name;                // "P", "Q", "Q+<2w1>", ...
  std::vector<WeightVec> generators;  // Z-basis (HNF rows) over fundamental weights

  bool contains(const IntVec& v) const;
  bool contains(const WeightVec& w) const;
  std::size_t index_in_weight_lattice() const;
};

// Weight lattice P (for BC the doubled node carries weight coordinate 2) and root lattice Q.
SubLattice weight_lattice(const FinTypeLabel& label);
SubLattice root_lattice(const FinTypeLabel& label);
// All L with Q <= L <= P, from the subgroups of P/Q.
std::vector<SubLattice> intermediate_lattices(const FinTypeLabel& label);

// Sum of the coefficients of lambda over `basis`. Throws if lambda is outside the span.
Rational hgt(const WeightVec& lambda, const std::vector<WeightVec>& basis);

struct MonoidReport {
  bool free = false;
  std::vector<WeightVec> irreducibles;
  std::optional<WeightVec> witness;  // element with two expansions, when not free
  int bound = 0;
  std::size_t elements_checked = 0;
};

// Irreducibles of L+ among dominant elements whose coordinate sum is <= bound,
// and whether every such element has a unique N-expansion over them.
MonoidReport analyze_monoid(const SubLattice& L, int height_bound);
std::optional<std::vector<WeightVec>> monoid_basis(const SubLattice& L, int height_bound);

struct QuadraticVerdict {
  bool quadratic = false;
  std::string certificate;  // e.g. "alpha_2 has hgt -1", "not free: ...", "ok"
  std::optional<int> negative_root;  // 0-based simple root index with hgt < 0
  std::vector<WeightVec> basis;
  int bound = 0;
};

// Both criteria (simple-root heights, direct degree-2 check) are evaluated and
// must agree; disagreement throws std::logic_error.
QuadraticVerdict is_quadratic(const SubLattice& L, int height_bound);

struct ClassificationRow {
  SubLattice lattice;
  QuadraticVerdict verdict;
};
// rank <= 5; bound <= 0 selects the default 6*rank.
std::vector<ClassificationRow> classify_quadratic(const FinTypeLabel& label, int height_bound = 0);

// Dominant weights nu <= x (x dominant integral) for a finite GCM.
std::vector<WeightVec> dominant_down_set(const GCM& m, const WeightVec& x);

struct DownSetReport {
  bool pass = true;
  std::string counterexample;
  // down_sets[i] = dominant weights <= eps_{i+1}, sorted by height
  std::vector<std::vector<WeightVec>> down_sets;
};
DownSetReport check_quadratic_down_sets(const FinTypeLabel& label);

}  // namespace smtkit
