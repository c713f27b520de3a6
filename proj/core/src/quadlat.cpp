#include "smtkit/quadlat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace smtkit {

namespace {

long long floor_mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}
long long floor_quot(long long a, long long p) { return (a - floor_mod(a, p)) / p; }

IntVec to_intvec(const WeightVec& w) {
  IntVec v;
  for (const auto& c : w.coords) {
    if (!is_integral(c)) throw std::invalid_argument("lattice vector must be integral");
    v.push_back(numer(c).convert_to<long long>());
  }
  return v;
}

WeightVec to_weight(const std::string& basis, const IntVec& v) {
  WeightVec w = WeightVec::zero(basis, static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w.coords[i] = v[i];
  return w;
}

// Reduces v modulo the HNF rows; returns the canonical representative.
IntVec reduce_mod(const std::vector<IntVec>& hnf, IntVec v) {
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    long long q = floor_quot(v[c], row[c]);
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

std::string describe(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[i] != 1) s += std::to_string(v[i]);
    s += "w" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

SubLattice make_lattice(const FinTypeLabel& label, std::string name, std::vector<IntVec> rows) {
  SubLattice L{label, std::move(name), {}};
  for (const auto& r : hermite_normal_form(std::move(rows))) L.generators.push_back(to_weight(label.name(), r));
  return L;
}

std::vector<IntVec> hnf_of(const SubLattice& L) {
  std::vector<IntVec> rows;
  for (const auto& g : L.generators) rows.push_back(to_intvec(g));
  return rows;
}

}  // namespace

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < a.size(); ++col) {
    while (true) {
      std::size_t piv = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][col] != 0 && (piv == a.size() || std::llabs(a[i][col]) < std::llabs(a[piv][col]))) piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        long long q = a[i][col] / a[r][col];
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t k = 0; k < r; ++k) {
      long long q = floor_quot(a[k][col], a[r][col]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) a[k][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

bool SubLattice::contains(const IntVec& v) const { return is_zero(reduce_mod(hnf_of(*this), v)); }

bool SubLattice::contains(const WeightVec& w) const {
  for (const auto& c : w.coords)
    if (!is_integral(c)) return false;
  return contains(to_intvec(w));
}

std::size_t SubLattice::index_in_weight_lattice() const {
  long long det = 1;
  for (const auto& row : hnf_of(*this)) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    det *= row[c];
  }
  long long pdet = (ambient.family == Family::BC) ? 2 : 1;
  return static_cast<std::size_t>(det / pdet);
}

SubLattice weight_lattice(const FinTypeLabel& label) {
  std::vector<IntVec> rows;
  for (int i = 0; i < label.rank; ++i) {
    IntVec e(label.rank, 0);
    e[i] = 1;
    rows.push_back(e);
  }
  // BC: the fundamental weight on the doubled node has coordinate 2
  if (label.family == Family::BC) rows.back().back() = 2;
  return make_lattice(label, "P", std::move(rows));
}

SubLattice root_lattice(const FinTypeLabel& label) {
  GCM m = build_cartan(label);
  std::vector<IntVec> rows;
  for (const auto& r : m.entries()) rows.emplace_back(r.begin(), r.end());
  return make_lattice(label, "Q", std::move(rows));
}

std::vector<SubLattice> intermediate_lattices(const FinTypeLabel& label) {
  SubLattice P = weight_lattice(label), Q = root_lattice(label);
  auto qh = hnf_of(Q);
  // elements of P/Q as canonical reps
  std::set<IntVec> group;
  std::vector<IntVec> frontier{IntVec(label.rank, 0)};
  group.insert(frontier[0]);
  auto pgens = hnf_of(P);
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& x : frontier)
      for (const auto& g : pgens) {
        IntVec y = x;
        for (std::size_t j = 0; j < y.size(); ++j) y[j] += g[j];
        y = reduce_mod(qh, y);
        if (group.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  auto closure = [&](const std::vector<IntVec>& gens) {
    std::set<IntVec> h{IntVec(label.rank, 0)};
    std::vector<IntVec> todo{IntVec(label.rank, 0)};
    while (!todo.empty()) {
      IntVec x = todo.back();
      todo.pop_back();
      for (const auto& g : gens) {
        IntVec y = x;
        for (std::size_t j = 0; j < y.size(); ++j) y[j] += g[j];
        y = reduce_mod(qh, y);
        if (h.insert(y).second) todo.push_back(y);
      }
    }
    return h;
  };
  // P/Q is cyclic or Z2 x Z2 for simple types, so two generators reach every subgroup
  std::map<std::set<IntVec>, std::vector<IntVec>> subgroups;
  std::vector<IntVec> elems(group.begin(), group.end());
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a; b < elems.size(); ++b) {
      std::vector<IntVec> gens;
      if (!is_zero(elems[a])) gens.push_back(elems[a]);
      if (!is_zero(elems[b]) && b != a) gens.push_back(elems[b]);
      auto h = closure(gens);
      if (!subgroups.count(h)) subgroups[h] = gens;
    }
  std::vector<SubLattice> out;
  for (const auto& [h, gens] : subgroups) {
    std::vector<IntVec> rows = qh;
    for (const auto& g : gens) rows.push_back(g);
    std::string name;
    if (h.size() == group.size())
      name = "P";
    else if (h.size() == 1)
      name = "Q";
    else {
      name = "Q+<";
      for (std::size_t k = 0; k < gens.size(); ++k) name += (k ? "," : "") + describe(gens[k]);
      name += ">";
    }
    out.push_back(make_lattice(label, name, std::move(rows)));
  }
  std::sort(out.begin(), out.end(), [](const SubLattice& x, const SubLattice& y) {
    if (x.index_in_weight_lattice() != y.index_in_weight_lattice())
      return x.index_in_weight_lattice() < y.index_in_weight_lattice();
    return x.name < y.name;
  });
  return out;
}

Rational hgt(const WeightVec& lambda, const std::vector<WeightVec>& basis) {
  QMatrix rows;
  for (const auto& b : basis) rows.push_back(b.coords);
  auto c = expand_over_rows(rows, lambda.coords);
  if (!c) throw std::invalid_argument("hgt: weight outside the span of the basis");
  Rational s = 0;
  for (const auto& x : *c) s += x;
  return s;
}

MonoidReport analyze_monoid(const SubLattice& L, int bound) {
  if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
  const int n = L.ambient.rank;
  auto hnf = hnf_of(L);
  const long long base = bound + 1;
  auto key = [&](const IntVec& v) {
    long long k = 0;
    for (long long x : v) k = k * base + x;
    return k;
  };
  // dominant elements of L with coordinate sum <= bound, in increasing sum
  std::vector<std::vector<IntVec>> by_height(bound + 1);
  IntVec cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      int h = bound - left;
      if (is_zero(reduce_mod(hnf, cur))) by_height[h].push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      rec(pos + 1, left - x);
    }
    cur[pos] = 0;
  };
  rec(0, bound);

  MonoidReport rep;
  rep.bound = bound;
  std::vector<IntVec> irr;
  std::unordered_map<long long, int> ways;  // capped at 2
  ways[key(IntVec(n, 0))] = 1;
  for (int h = 1; h <= bound; ++h)
    for (const auto& x : by_height[h]) {
      bool reducible = false;
      for (const auto& g : irr) {
        bool le = true;
        for (int j = 0; j < n && le; ++j) le = g[j] <= x[j];
        if (le) {
          reducible = true;
          break;
        }
      }
      if (!reducible) irr.push_back(x);
    }
  // unbounded-knapsack count of multisets of irreducibles
  std::vector<IntVec> all;
  for (const auto& level : by_height)
    for (const auto& x : level) all.push_back(x);
  rep.elements_checked = all.size();
  for (const auto& g : irr)
    for (const auto& x : all) {
      IntVec y = x;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        y[j] -= g[j];
        ok = y[j] >= 0;
      }
      if (!ok) continue;
      auto it = ways.find(key(y));
      if (it == ways.end()) continue;
      int& w = ways[key(x)];
      w = std::min(2, w + it->second);
    }
  rep.free = true;
  for (const auto& x : all) {
    if (ways[key(x)] != 1) {
      rep.free = false;
      rep.witness = to_weight(L.ambient.name(), x);
      break;
    }
  }
  for (const auto& g : irr) rep.irreducibles.push_back(to_weight(L.ambient.name(), g));
  return rep;
}

std::optional<std::vector<WeightVec>> monoid_basis(const SubLattice& L, int bound) {
  auto rep = analyze_monoid(L, bound);
  if (!rep.free) return std::nullopt;
  return rep.irreducibles;
}

std::vector<WeightVec> dominant_down_set(const GCM& m, const WeightVec& x) {
  auto r = root_coordinates(m, x);
  if (!r) throw std::invalid_argument("dominant_down_set: weight outside root span");
  const int n = m.rank();
  std::vector<long long> top(n);
  for (int i = 0; i < n; ++i) top[i] = (*r)[i] < 0 ? -1 : floor_div((*r)[i]).convert_to<long long>();
  std::vector<WeightVec> out;
  std::vector<long long> c(n, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      WeightVec w = x;
      for (int i = 0; i < n; ++i)
        if (c[i]) w -= Rational(c[i]) * simple_root(m, i);
      if (w.is_dominant()) out.push_back(std::move(w));
      return;
    }
    for (long long k = 0; k <= top[pos]; ++k) {
      c[pos] = k;
      rec(pos + 1);
    }
  };
  rec(0);
  auto height = [&](const WeightVec& w) {
    Rational h = 0;
    const auto rc = root_coordinates(m, w);
    for (const auto& q : *rc) h += q;
    return h;
  };
  std::vector<std::pair<Rational, WeightVec>> keyed;
  for (auto& w : out) keyed.emplace_back(height(w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [h, w] : keyed) out.push_back(std::move(w));
  return out;
}

QuadraticVerdict is_quadratic(const SubLattice& L, int bound) {
  auto basis = monoid_basis(L, bound);
  if (!basis) throw std::invalid_argument("is_quadratic: monoid basis unavailable (L+ not free within bound)");
  GCM m = build_cartan(L.ambient);
  QuadraticVerdict v;
  v.basis = *basis;
  v.bound = bound;

  // criterion 1: heights of simple roots
  std::optional<int> neg;
  for (int i = 0; i < m.rank() && !neg; ++i)
    if (hgt(simple_root(m, i), *basis) < 0) neg = i;

  // criterion 2: every dominant lambda <= eps + eta has height <= 2
  bool direct = true;
  std::string direct_witness;
  for (std::size_t a = 0; a < basis->size() && direct; ++a)
    for (std::size_t b = a; b < basis->size() && direct; ++b) {
      WeightVec top = (*basis)[a] + (*basis)[b];
      for (const auto& lam : dominant_down_set(m, top))
        if (hgt(lam, *basis) > 2) {
          direct = false;
          direct_witness = to_string(lam);
          break;
        }
    }
  if (direct != !neg.has_value())
    throw std::logic_error("is_quadratic: height criterion and direct check disagree for " +
                           L.ambient.name() + " " + L.name);
  v.quadratic = direct;
  v.negative_root = neg;
  if (neg)
    v.certificate = "alpha_" + std::to_string(*neg) + " has hgt " +
                    to_string(hgt(simple_root(m, *neg), *basis)) + "; " + direct_witness + " has hgt > 2";
  else
    v.certificate = "ok";
  return v;
}

std::vector<ClassificationRow> classify_quadratic(const FinTypeLabel& label, int bound) {
  if (label.rank > 5) throw std::invalid_argument("classify_quadratic: rank <= 5 only");
  if (bound <= 0) bound = 6 * label.rank;
  std::vector<ClassificationRow> out;
  for (auto& L : intermediate_lattices(label)) {
    auto rep = analyze_monoid(L, bound);
    QuadraticVerdict v;
    v.bound = bound;
    if (!rep.free) {
      v.quadratic = false;
      v.certificate = "not free: " + to_string(*rep.witness) + " has two expansions";
    } else {
      v = is_quadratic(L, bound);
    }
    out.push_back({std::move(L), std::move(v)});
  }
  return out;
}

DownSetReport check_quadratic_down_sets(const FinTypeLabel& label) {
  GCM m = build_cartan(label);
  auto eps = quadratic_basis(label);
  const int l = label.rank;
  auto e = [&](int i) { return i == 0 ? WeightVec::zero(m.id(), l) : eps[i - 1]; };
  DownSetReport rep;
  for (int i = 1; i <= l; ++i) rep.down_sets.push_back(dominant_down_set(m, e(i)));
  for (int i = 1; i <= l && rep.pass; ++i) {
    if (!dominant_leq(e(i), e(1) + e(i - 1), m)) {
      rep.pass = false;
      rep.counterexample = "eps_" + std::to_string(i) + " not <= eps_1 + eps_" + std::to_string(i - 1);
      break;
    }
    if (i < 2) continue;
    auto mus = dominant_down_set(m, e(1));
    auto lams = dominant_down_set(m, e(i - 1));
    for (const auto& mu : mus)
      for (const auto& lam : lams)
        if (dominant_leq(e(i), lam + mu, m) && !(mu == e(1) && lam == e(i - 1))) {
          rep.pass = false;
          rep.counterexample = "i=" + std::to_string(i) + " mu=" + to_string(mu) + " lambda=" + to_string(lam);
          return rep;
        }
  }
  return rep;
}

}  // namespace smtkit
