#include "smtkit/smt.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace smtkit {

// ---------------------------------------------------------------- minuscule posets

std::optional<std::size_t> MinusculePoset::index_of(const WeightVec& w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) return i;
  return std::nullopt;
}

MinusculePoset minuscule_poset(const GCM& m, int node) {
  if (node < 0 || node >= m.rank()) throw std::invalid_argument("minuscule_poset: node out of range");
  if (!m.nonreduced().empty() || classify(m) != GcmClass::Finite)
    throw std::invalid_argument("minuscule_poset: finite reduced type required");
  Realization r(m);
  const WeightVec top = WeightVec::fundamental(m.id(), m.rank(), node);
  std::set<WeightVec> seen{top};
  std::vector<WeightVec> todo{top};
  while (!todo.empty()) {
    WeightVec x = std::move(todo.back());
    todo.pop_back();
    for (const auto& c : x.coords)
      if (c < -1 || c > 1) throw std::invalid_argument("minuscule_poset: omega_" + std::to_string(node) + " is not minuscule");
    for (int i = 0; i < m.rank(); ++i) {
      if (x.coords[i] == 0) continue;
      WeightVec y = r.reflect(i, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }

  // coordinates of top - w over the simple roots
  std::vector<std::pair<int, WeightVec>> tagged;
  std::vector<QVector> coords;
  for (const auto& w : seen) {
    auto c = root_coordinates(m, top - w);
    if (!c) throw std::logic_error("minuscule_poset: orbit weight outside the root lattice coset");
    Rational h = std::accumulate(c->begin(), c->end(), Rational(0));
    tagged.emplace_back(static_cast<int>(numer(h)), w);
  }
  std::sort(tagged.begin(), tagged.end());

  MinusculePoset p;
  p.gcm = m;
  p.node = node;
  for (auto& [d, w] : tagged) {
    coords.push_back(*root_coordinates(m, top - w));
    p.depth.push_back(d);
    p.weights.push_back(std::move(w));
  }
  const std::size_t n = p.weights.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < coords[i].size() && ok; ++k) ok = coords[j][k] >= coords[i][k];
      p.leq[i][j] = ok;
    }
  return p;
}

MinusculePoset minuscule_poset(const FinTypeLabel& label, int node) {
  if (!label.reduced()) throw std::invalid_argument("minuscule_poset: reduced type required");
  return minuscule_poset(build_cartan(label), node);
}

PairCounts count_standard_pairs(const MinusculePoset& p) {
  PairCounts c;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j) (p.comparable(i, j) ? c.comparable : c.incomparable)++;
  return c;
}

// ---------------------------------------------------------------- straightening

namespace {

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

StraighteningSystem::StraighteningSystem(std::vector<Generator> gens,
                                         const std::vector<std::pair<std::string, std::string>>& order,
                                         const std::vector<Relation>& relations) {
  const std::size_t n = gens.size();
  std::map<std::string, int> input_index;
  for (std::size_t i = 0; i < n; ++i)
    if (!input_index.emplace(gens[i].id, static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate generator id: " + gens[i].id);
  auto lookup = [&](const std::string& id) {
    auto it = input_index.find(id);
    if (it == input_index.end()) throw std::invalid_argument("unknown generator id: " + id);
    return it->second;
  };

  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : order) lt[lookup(a)][lookup(b)] = true;
  for (std::size_t i = 0; i < n; ++i) lt[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (lt[k][j]) lt[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lt[i][j] && lt[j][i]) throw std::invalid_argument("order has a cycle through " + gens[i].id);

  // linear extension, ties broken by input position
  std::vector<int> perm;
  std::vector<bool> placed(n, false);
  while (perm.size() < n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j)
        if (!placed[j] && j != i && lt[j][i]) minimal = false;
      if (minimal) {
        placed[i] = true;
        perm.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  std::vector<int> where(n);
  for (std::size_t k = 0; k < n; ++k) where[perm[k]] = static_cast<int>(k);
  for (int i : perm) gens_.push_back(gens[i]);
  for (std::size_t k = 0; k < n; ++k) by_id_[gens_[k].id] = static_cast<int>(k);
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq_[where[i]][where[j]] = lt[i][j];

  for (const auto& rel : relations) {
    int a = index(rel.a), b = index(rel.b);
    if (comparable(a, b)) throw std::invalid_argument("relation on comparable pair " + rel.a + "," + rel.b);
    Monomial lead = a < b ? Monomial{a, b} : Monomial{b, a};
    Poly rhs;
    for (const auto& t : rel.rhs) {
      Monomial mono = monomial(t.mono);
      if (!less(mono, lead))
        throw std::invalid_argument("relation term " + to_string(*this, {{mono, 1}}) + " is not below " + rel.a + "*" + rel.b);
      rhs[mono] += t.coef;
      if (rhs[mono] == 0) rhs.erase(mono);
    }
    if (!rel_.emplace(std::pair{lead[0], lead[1]}, std::move(rhs)).second)
      throw std::invalid_argument("duplicate relation for " + rel.a + "," + rel.b);
  }
}

int StraighteningSystem::index(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw std::invalid_argument("unknown generator id: " + id);
  return it->second;
}

Monomial StraighteningSystem::monomial(const std::vector<std::string>& ids) const {
  Monomial m;
  for (const auto& id : ids) m.push_back(index(id));
  std::sort(m.begin(), m.end());
  return m;
}

std::vector<std::string> StraighteningSystem::ids(const Monomial& m) const {
  std::vector<std::string> out;
  for (int i : m) out.push_back(gens_[i].id);
  return out;
}

int StraighteningSystem::grade(const Monomial& m) const {
  int g = 0;
  for (int i : m) g += gens_[i].grade;
  return g;
}

bool StraighteningSystem::is_standard(const Monomial& m) const {
  for (std::size_t k = 1; k < m.size(); ++k)
    if (!leq_[m[k - 1]][m[k]]) return false;
  return true;
}

bool StraighteningSystem::less(const Monomial& a, const Monomial& b) const {
  const int ga = grade(a), gb = grade(b);
  if (ga != gb) return ga < gb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Poly StraighteningSystem::straighten(const Monomial& m, PairChoice choice) const {
  Monomial s = m;
  std::sort(s.begin(), s.end());
  for (int i : s)
    if (i < 0 || i >= static_cast<int>(size())) throw std::invalid_argument("straighten: generator out of range");
  return straighten(Poly{{s, 1}}, choice);
}

Poly StraighteningSystem::straighten(const Poly& p, PairChoice choice) const {
  auto cmp = [this](const Monomial& a, const Monomial& b) { return less(a, b); };
  std::map<Monomial, Rational, decltype(cmp)> work(cmp);
  for (const auto& [m, c] : p)
    if (c != 0) work[m] += c;
  Poly done;
  for (std::size_t steps = 0; !work.empty(); ++steps) {
    if (steps > 10000000) throw std::runtime_error("straighten: step limit exceeded");
    auto top = std::prev(work.end());
    Monomial m = top->first;
    Rational c = top->second;
    work.erase(top);
    if (c == 0) continue;
    if (is_standard(m)) {
      done[m] += c;
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if (!comparable(m[i], m[j]) && (!pos || choice == PairChoice::Last)) pos = {i, j};
    auto rel = rel_.find({m[pos->first], m[pos->second]});
    if (rel == rel_.end())
      throw std::runtime_error("straighten: no relation for " + gens_[m[pos->first]].id + "*" + gens_[m[pos->second]].id);
    Monomial rest;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (k != pos->first && k != pos->second) rest.push_back(m[k]);
    for (const auto& [t, coef] : rel->second) {
      Monomial next = merge(rest, t);
      auto& slot = work[next];
      slot += c * coef;
      if (slot == 0) work.erase(next);
    }
  }
  for (auto it = done.begin(); it != done.end();) it = it->second == 0 ? done.erase(it) : std::next(it);
  return done;
}

std::vector<Monomial> StraighteningSystem::standard_monomials(int degree) const {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < static_cast<int>(size()); ++i) {
      if (!cur.empty() && !leq_[cur.back()][i]) continue;
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<std::string, std::string>> StraighteningSystem::covers() const {
  std::vector<std::pair<std::string, std::string>> out;
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!leq_[i][j]) continue;
      bool direct = true;
      for (int k = i + 1; k < j && direct; ++k) direct = !(leq_[i][k] && leq_[k][j]);
      if (direct) out.emplace_back(gens_[i].id, gens_[j].id);
    }
  return out;
}

std::string to_string(const StraighteningSystem& s, const Poly& p) {
  if (p.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return s.less(b.first, a.first); });
  std::string out;
  for (const auto& [m, c] : terms) {
    Rational a = c;
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    std::string body;
    for (int g : m) body += (body.empty() ? "" : "*") + s.generator(g).id;
    if (body.empty()) body = "1";
    out += a == 1 ? body : to_string(a) + "*" + body;
  }
  return out;
}

// ---------------------------------------------------------------- E_7 seed

E7Data e7_data() {
  E7Data d;
  GCM e6 = build_cartan(FinTypeLabel{Family::E, 6});
  d.datum = extend_ambient(e6, WeightVec::fundamental(e6.id(), 6, 0));
  if (identify_label(d.datum.extended) != "E_7") throw std::logic_error("e7_data: extension is not E_7");
  d.poset = minuscule_poset(d.datum.extended, 0);
  const GCM& m = d.datum.extended;

  auto lower = [&](std::size_t from, int k) {
    const WeightVec& w = d.poset.weights[from];
    if (w.coords[k] != 1) throw std::logic_error("e7_data: f_" + std::to_string(k) + " does not act");
    auto idx = d.poset.index_of(w - simple_root(m, k));
    if (!idx) throw std::logic_error("e7_data: lowered weight missing");
    return *idx;
  };
  d.label["x0"] = d.poset.minimum();
  const std::vector<std::tuple<std::string, std::string, int>> steps = {
      {"x1", "x0", 0}, {"x2", "x1", 1}, {"x3", "x2", 3}, {"x4", "x3", 4}, {"x5", "x4", 5}, {"y5", "x4", 2},
      {"y4", "y5", 5}, {"y3", "y4", 4}, {"y2", "y3", 3}, {"y1", "y2", 1}, {"y0", "y1", 0}};
  for (const auto& [to, from, k] : steps) d.label[to] = lower(d.label.at(from), k);

  const WeightVec top = d.poset.weights[0];
  for (const auto& w : d.poset.weights) {
    auto c = root_coordinates(m, top - w);
    d.grade.push_back(static_cast<int>(numer((*c)[0])));
  }
  return d;
}

namespace {

Relation e7_relation() {
  // x5 y5 = x0 y0 - x1 y1 + x2 y2 - x3 y3 + x4 y4
  Relation r{"x5", "y5", {}};
  for (int k = 0; k <= 4; ++k)
    r.rhs.push_back({Rational(k % 2 == 0 ? 1 : -1), {"x" + std::to_string(k), "y" + std::to_string(k)}});
  return r;
}

StraighteningSystem e7_subsystem(const E7Data& d, bool all) {
  std::map<std::size_t, std::string> name;
  for (const auto& [lbl, idx] : d.label) name[idx] = lbl;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.poset.size(); ++i)
    if (all || name.count(i)) keep.push_back(i);
  auto id = [&](std::size_t i) { return name.count(i) ? name[i] : "w" + std::to_string(i); };
  std::vector<Generator> gens;
  for (auto i : keep) gens.push_back({id(i), d.grade[i]});
  std::vector<std::pair<std::string, std::string>> order;
  for (auto i : keep)
    for (auto j : keep) {
      if (i == j || !d.poset.leq[i][j]) continue;
      if (all && d.poset.depth[j] != d.poset.depth[i] + 1) continue;  // covers suffice
      order.emplace_back(id(i), id(j));
    }
  return StraighteningSystem(std::move(gens), order, {e7_relation()});
}

}  // namespace

StraighteningSystem e7_system(const E7Data& d) { return e7_subsystem(d, true); }
StraighteningSystem e7_seed_system(const E7Data& d) { return e7_subsystem(d, false); }

// ---------------------------------------------------------------- counting identities

namespace {

WeightVec omega0(const AmbientModel& model) {
  const auto& e = model.ambient().extended;
  return WeightVec::fundamental(e.id(), e.rank(), 0);
}

void check_m(const AmbientModel& model, int m) {
  if (m < 0 || m > model.rank()) throw std::invalid_argument("m must lie in 0..rank");
}

// Nondecreasing tuples over [lo, hi] of length n.
template <class F>
void for_each_tuple(int lo, int hi, int n, F&& f) {
  std::vector<int> t;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(t.size()) == n) {
      f(std::as_const(t));
      return;
    }
    for (int i = from; i <= hi; ++i) {
      t.push_back(i);
      self(self, i);
      t.pop_back();
    }
  };
  rec(rec, lo);
}

}  // namespace

std::size_t graded_count(const AmbientModel& model, int m, int n, bool richardson, EnumerationOptions opts) {
  check_m(model, m);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (n == 0) return 1;
  Realization ar = Realization::of(model.ambient());
  const WeightVec shape = Rational(n) * omega0(model);
  PathModel pm(ar, shape, act(ar, model.tau(m), shape), opts);
  if (!richardson) return pm.count();
  std::size_t c = 0;
  for (const auto& p : pm.enumerate())
    if (!(p.min_dir() == shape)) ++c;
  return c;
}

Integer expected_count(const AmbientModel& model, int m, int n, bool richardson) {
  check_m(model, m);
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const GCM& base = model.ambient().base;
  Integer total = 0;
  for_each_tuple(richardson ? 1 : 0, m, n, [&](const std::vector<int>& t) {
    WeightVec w = WeightVec::zero(base.id(), base.rank());
    for (int i : t)
      if (i > 0) w += model.eps_image(i);
    total += weyl_dim(base, w);
  });
  return total;
}

Integer standard_above_count(const AmbientModel& model, int m, int n, bool richardson, EnumerationOptions opts) {
  check_m(model, m);
  if (n == 0) return 1;
  Realization ar = Realization::of(model.ambient());
  const WeightVec w0 = omega0(model);
  PathModel pm(ar, w0, act(ar, model.tau(m), w0), opts);
  std::vector<LSPath> ps;
  for (auto& p : pm.enumerate())
    if (!richardson || !(p.min_dir() == w0)) ps.push_back(std::move(p));
  const std::size_t k = ps.size();
  std::vector<Integer> cur(k, 1);
  for (int deg = 2; deg <= n; ++deg) {
    std::vector<Integer> next(k, 0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i)
        if (path_leq(pm.space(), ps[i], ps[j])) next[j] += cur[i];
    cur = std::move(next);
  }
  return std::accumulate(cur.begin(), cur.end(), Integer(0));
}

BelowReport standard_below(const AmbientModel& model, int n, EnumerationOptions opts) {
  if (n < 1) throw std::invalid_argument("standard_below: degree must be positive");
  const GCM& base = model.ambient().base;
  Realization rb(base);
  FiniteWeylGroup fw(rb, opts.interval_cap);
  std::vector<int> all(base.rank());
  std::iota(all.begin(), all.end(), 0);
  const Word longest = longest_element(rb, all);

  std::vector<TypedPath> typed;
  for (int i = 1; i <= model.rank(); ++i) {
    const WeightVec shape = model.eps_image(i);
    PathModel pm(rb, shape, act(rb, longest, shape), opts);
    for (auto& p : pm.enumerate()) typed.push_back({i, std::move(p)});
  }
  std::vector<LSPath> lifted;
  for (const auto& tp : typed) lifted.push_back(lift_path(model, tp));

  Realization ar = Realization::of(model.ambient());
  const WeightVec w0 = omega0(model);
  CosetSpace space(ar, w0);

  BelowReport rep;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      ++rep.candidates;
      std::vector<TypedPath> mono;
      for (auto k : pick) mono.push_back(typed[k]);
      if (!is_standard_below(fw, mono)) return;
      ++rep.standard;
      std::vector<std::size_t> order = pick;
      bool found = false;
      do {
        std::vector<LSPath> up;
        for (auto k : order) up.push_back(lifted[k]);
        found = is_standard_above(space, up);
      } while (!found && std::next_permutation(order.begin(), order.end()));
      if (!found) rep.lifts_standard = false;
      return;
    }
    for (std::size_t k = from; k < typed.size(); ++k) {
      pick.push_back(k);
      self(self, k);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::set<std::string> from_lift, richardson;
  for (const auto& p : lifted) from_lift.insert(to_string(p));
  PathModel pm(ar, w0, act(ar, model.tau(model.rank()), w0), opts);
  for (const auto& p : pm.enumerate())
    if (!(p.min_dir() == w0)) richardson.insert(to_string(p));
  rep.degree1_bijective = from_lift == richardson && from_lift.size() == lifted.size();
  return rep;
}

GradingBoundReport check_egr_bound(const AmbientModel& model, EnumerationOptions opts) {
  const ExtendedDatum& rd = model.restricted();
  Realization ar = Realization::of(model.ambient());
  const WeightVec w0 = omega0(model);
  PathModel pm(ar, w0, act(ar, model.tau(model.rank()), w0), opts);
  std::set<WeightVec> ends;
  for (const auto& p : pm.enumerate()) ends.insert(p.endpoint());
  const auto orbit_list = small_orbit(rd);
  const std::set<WeightVec> orbit(orbit_list.begin(), orbit_list.end());

  GradingBoundReport rep;
  rep.n0 = n0(rd);
  bool first = true;
  for (const auto& e : ends) {
    ++rep.weights;
    auto r = model.restrict_weight(e);
    if (!r || !in_spherical_lattice(rd, *r)) continue;
    ++rep.in_lattice;
    const Rational g = egr(rd, *r);
    if (first || g > rep.max_egr) rep.max_egr = g;
    first = false;
    if (g > rep.n0) rep.bound_holds = false;
    if (g == rep.n0 && !orbit.count(*r)) rep.equality_only_on_orbit = false;
  }
  return rep;
}

FiniteCaseReport finite_case_structure(int l) {
  if (l < 1) throw std::invalid_argument("finite_case_structure: rank must be positive");
  AmbientModel model = AmbientModel::flip(FinTypeLabel{Family::A, l});
  const ExtendedDatum& rd = model.restricted();
  FiniteCaseReport rep;
  rep.rank = l;

  Realization rr = Realization::of(rd);
  rep.tau_identity = act(rr, restricted_tau(rd, l), eomega0(rd)) == eomega0(rd) - eeps(rd, 1);

  std::set<WeightVec> seen{eomega0(rd)};
  std::vector<WeightVec> todo{eomega0(rd)};
  while (!todo.empty()) {
    WeightVec x = std::move(todo.back());
    todo.pop_back();
    for (int i = 0; i < rd.rank(); ++i) {
      WeightVec y = rr.reflect(i, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  rep.restricted_orbit = seen.size();

  MinusculePoset poset = minuscule_poset(model.ambient().extended, 0);
  rep.basis_size = poset.size();
  Realization ar = Realization::of(model.ambient());
  const WeightVec w0 = omega0(model);
  CosetSpace space(ar, w0);
  auto interval = space.lower_interval(act(ar, model.tau(l), w0));
  std::set<WeightVec> rich(interval.begin(), interval.end());
  rich.erase(w0);
  rep.richardson_size = rich.size();
  std::set<WeightVec> inner(poset.weights.begin(), poset.weights.end());
  inner.erase(poset.weights[poset.minimum()]);
  inner.erase(poset.weights[poset.maximum()]);
  rep.richardson_matches = rich == inner && poset.weights[poset.minimum()] == w0;
  return rep;
}

TauExperiment tau_experiment(const FinTypeLabel& restricted) {
  ExtendedDatum d = extend_restricted(restricted);
  Realization r = Realization::of(d);
  TauExperiment t;
  t.label = identify_label(d.extended);
  t.tau_image = act(r, restricted_tau(d, d.base_rank()), eomega0(d));
  t.predicted = Rational(3) * eomega0(d) - eeps(d, d.base_rank());
  t.equal_mod_delta = t.tau_image.coords == t.predicted.coords;
  return t;
}

}  // namespace smtkit
