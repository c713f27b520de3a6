#include "smtkit/extend.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace smtkit {

namespace {

GCM add_front_node(const GCM& base, const std::vector<int>& row0, const std::vector<int>& col0, std::string id) {
  const int n = base.rank();
  IntMatrix m(n + 1, std::vector<int>(n + 1, 0));
  m[0][0] = 2;
  for (int i = 0; i < n; ++i) {
    m[0][i + 1] = row0[i];
    m[i + 1][0] = col0[i];
    for (int j = 0; j < n; ++j) m[i + 1][j + 1] = base(i, j);
  }
  std::vector<int> nr;
  for (int v : base.nonreduced()) nr.push_back(v + 1);
  return GCM(std::move(m), std::move(nr), std::move(id));
}

int to_int_checked(const Rational& q, const char* what) {
  if (!is_integral(q)) throw std::invalid_argument(std::string(what) + ": weight must be integral");
  return numer(q).convert_to<int>();
}

}  // namespace

ExtendedDatum extend_ambient(const GCM& base, const WeightVec& eps) {
  if (eps.size() != base.rank()) throw std::invalid_argument("extend_ambient: weight dimension mismatch");
  if (!eps.is_integral() || !eps.is_dominant())
    throw std::invalid_argument("extend_ambient: eps must be dominant integral");
  std::vector<int> row0(base.rank()), col0(base.rank());
  for (int i = 0; i < base.rank(); ++i) {
    row0[i] = -to_int_checked(eps.coords[i], "extend_ambient");
    col0[i] = row0[i] != 0 ? -1 : 0;
  }
  ExtendedDatum d;
  d.base = base;
  d.epsilon = eps;
  d.extended = add_front_node(base, row0, col0, "ext(" + base.id() + ")");
  d.tier = Tier::Ambient;
  d.kind = symmetrizer(d.extended) ? classify(d.extended) : GcmClass::Indefinite;
  d.root_delta.assign(d.extended.rank(), 0);
  if (d.kind == GcmClass::Affine) d.root_delta[0] = 1;
  return d;
}

ExtendedDatum extend_restricted(const FinTypeLabel& label, const std::optional<WeightVec>& eps_in) {
  switch (label.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::BC: break;
    default: throw std::invalid_argument("extend_restricted: unsupported label " + label.name());
  }
  GCM base = build_cartan(label);
  WeightVec eps = eps_in ? *eps_in
                         : (label.family == Family::D ? WeightVec::fundamental(base.id(), label.rank, 0)
                                                      : quadratic_basis(label)[0]);
  if (eps.size() != base.rank() || !eps.is_integral() || !eps.is_dominant())
    throw std::invalid_argument("extend_restricted: eps must be dominant integral");
  std::vector<int> row0(base.rank()), col0(base.rank());
  for (int i = 0; i < base.rank(); ++i) {
    row0[i] = -2 * to_int_checked(eps.coords[i], "extend_restricted");
    col0[i] = row0[i] != 0 ? -1 : 0;
  }
  ExtendedDatum d;
  d.base = base;
  d.epsilon = eps;
  d.extended = add_front_node(base, row0, col0, "res(" + base.id() + ")");
  d.tier = Tier::Restricted;
  d.kind = classify(d.extended);
  d.root_delta.assign(d.extended.rank(), 0);
  if (d.kind == GcmClass::Affine) d.root_delta[0] = 2;
  d.restricted_label = label;
  return d;
}

// ---------------------------------------------------------------- labels

std::optional<std::vector<int>> find_isomorphism(const GCM& a, const GCM& b) {
  const int n = a.rank();
  if (b.rank() != n) return std::nullopt;
  auto signature = [](const GCM& m, int i) {
    std::vector<std::pair<int, int>> s;
    for (int j = 0; j < m.rank(); ++j)
      if (j != i && m(i, j) != 0) s.emplace_back(m(i, j), m(j, i));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::pair<int, int>>> sa(n), sb(n);
  for (int i = 0; i < n; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || sa[i] != sb[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a(i, j) == b(c, perm[j]) && a(j, i) == b(perm[j], c);
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      if (rec(i + 1)) return true;
      used[c] = false;
    }
    perm[i] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return perm;
}

namespace {

std::string identify_component(const GCM& m) {
  if (!symmetrizer(m)) return "indefinite";
  const int n = m.rank();
  GcmClass c = classify(m);
  if (c == GcmClass::Finite) {
    // C before B so that the rank-2 case reads C_2
    for (Family f : {Family::A, Family::C, Family::B, Family::D, Family::E, Family::F, Family::G}) {
      FinTypeLabel l{f, n};
      if (!is_valid(l)) continue;
      GCM t = build_cartan(l);
      GCM plain(t.entries());
      if (find_isomorphism(GCM(m.entries()), plain)) return l.name();
    }
    return "finite";
  }
  if (c == GcmClass::Affine) {
    const int k = n - 1;
    std::vector<std::string> names = {
        "A_" + std::to_string(k) + "^{(1)}", "B_" + std::to_string(k) + "^{(1)}",
        "C_" + std::to_string(k) + "^{(1)}", "D_" + std::to_string(k) + "^{(1)}",
        "A_" + std::to_string(2 * k) + "^{(2)}", "A_" + std::to_string(2 * k - 1) + "^{(2)}",
        "D_" + std::to_string(k + 1) + "^{(2)}"};
    for (const auto& name : names) {
      GCM t;
      try {
        t = build_affine_cartan(name);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (find_isomorphism(GCM(m.entries()), t)) return name;
    }
    return "affine";
  }
  return "indefinite";
}

}  // namespace

std::string identify_label(const GCM& m) {
  auto comps = m.components();
  if (comps.size() == 1) return identify_component(GCM(m.entries()));
  std::vector<std::string> parts;
  for (const auto& comp : comps) {
    std::string p = identify_component(GCM(m.entries()).principal(comp));
    if (p == "indefinite") return "indefinite";
    parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "+") + p;
  return s;
}

// ---------------------------------------------------------------- gradings

namespace {
void require_restricted(const ExtendedDatum& d) {
  if (d.tier != Tier::Restricted || !d.restricted_label)
    throw std::invalid_argument("restricted-tier datum required");
}
}  // namespace

WeightVec eomega0(const ExtendedDatum& d) {
  WeightVec w = WeightVec::zero(d.extended.id(), d.rank());
  w.coords[0] = Rational(1, 2);
  return w;
}

WeightVec eeps(const ExtendedDatum& d, int i) {
  require_restricted(d);
  WeightVec w = WeightVec::zero(d.extended.id(), d.rank());
  if (i == 0) {
    w.coords[0] = 1;
    return w;
  }
  auto q = quadratic_multipliers(*d.restricted_label);
  w.coords.at(i) = q.at(i - 1);
  return w;
}

SplitWeight to_split(const ExtendedDatum& d, const WeightVec& lambda) {
  require_restricted(d);
  auto q = quadratic_multipliers(*d.restricted_label);
  SplitWeight s;
  s.eps_coords.resize(d.rank());
  s.eps_coords[0] = lambda.coords[0];
  for (int i = 1; i < d.rank(); ++i) s.eps_coords[i] = lambda.coords[i] / q[i - 1];
  s.delta = lambda.delta;
  return s;
}

WeightVec from_split(const ExtendedDatum& d, const SplitWeight& s) {
  WeightVec w = WeightVec::zero(d.extended.id(), d.rank());
  for (int i = 0; i < d.rank(); ++i) w += s.eps_coords.at(i) * eeps(d, i);
  w += s.gamma * eomega0(d);
  w.delta += s.delta;
  return w;
}

Rational d_pairing(const ExtendedDatum& d, const WeightVec& lambda) {
  if (d.kind == GcmClass::Affine) return lambda.delta;
  if (d.kind != GcmClass::Finite) throw std::invalid_argument("d_pairing: indefinite type");
  auto c = root_coordinates(d.extended, lambda);
  Rational coef = (*c)[0];
  return d.tier == Tier::Restricted ? 2 * coef : coef;
}

Rational egr(const ExtendedDatum& d, const SplitWeight& s) {
  WeightVec lambda = from_split(d, s);
  Rational g = 0;
  for (int i = 1; i < d.rank(); ++i) g += Rational(i) * s.eps_coords[i];
  return g + d_pairing(d, lambda);
}

Rational egr(const ExtendedDatum& d, const WeightVec& lambda) { return egr(d, to_split(d, lambda)); }

Rational gr(const QVector& a) {
  Rational g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g += Rational(static_cast<long>(i + 1)) * a[i];
  return g;
}

Rational n0(const ExtendedDatum& d) {
  switch (d.kind) {
    case GcmClass::Affine: return 0;
    case GcmClass::Finite: return Rational(d.base_rank() + 1, 2);
    default: throw std::invalid_argument("n0: indefinite type");
  }
}

bool in_spherical_lattice(const ExtendedDatum& d, const WeightVec& lambda) {
  require_restricted(d);
  SplitWeight s = to_split(d, lambda);
  if (!is_integral(s.delta)) return false;
  for (int i = 1; i < d.rank(); ++i)
    if (!is_integral(s.eps_coords[i])) return false;
  // gamma-coefficient once lambda is rewritten over eps_i, gamma, delta
  auto eps = quadratic_basis(*d.restricted_label);
  Rational g = 2 * s.eps_coords[0];
  for (int i = 1; i < d.rank(); ++i) {
    auto r = root_coordinates(d.base, eps[i - 1]);
    Rational pair0 = 0;  // <eps_i, alpha~_0^vee>
    for (int j = 0; j < d.base_rank(); ++j) pair0 += (*r)[j] * d.extended(j + 1, 0);
    g -= s.eps_coords[i] * 2 * pair0;
  }
  return is_integral(g);
}

}  // namespace smtkit
