#include "smtkit/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <stdexcept>

namespace smtkit {

// ---------------------------------------------------------------- labels

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string FinTypeLabel::name() const { return family_name(family) + "_" + std::to_string(rank); }

Family FinTypeLabel::parse_family(std::string_view t) {
  if (t == "A") return Family::A;
  if (t == "B") return Family::B;
  if (t == "C") return Family::C;
  if (t == "D") return Family::D;
  if (t == "E") return Family::E;
  if (t == "F") return Family::F;
  if (t == "G") return Family::G;
  if (t == "BC") return Family::BC;
  throw std::invalid_argument("unknown family: " + std::string(t));
}

FinTypeLabel FinTypeLabel::parse(std::string_view text) {
  static const std::regex re(R"(^(BC|[ABCDEFG])_?\{?(\d+)\}?$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad type label: " + s);
  FinTypeLabel label{parse_family(m[1].str()), std::stoi(m[2].str())};
  if (!is_valid(label)) throw std::invalid_argument("invalid rank for family: " + s);
  return label;
}

bool is_valid(const FinTypeLabel& l) {
  switch (l.family) {
    case Family::A:
    case Family::B:
    case Family::BC: return l.rank >= 1;
    case Family::C: return l.rank >= 2;
    case Family::D: return l.rank >= 4;
    case Family::E: return l.rank >= 6 && l.rank <= 8;
    case Family::F: return l.rank == 4;
    case Family::G: return l.rank == 2;
  }
  return false;
}

// ---------------------------------------------------------------- GCM

bool is_gcm(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 2) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) return false;
      if ((m[i][j] == 0) != (m[j][i] == 0)) return false;
    }
  }
  return true;
}

GCM::GCM(IntMatrix entries, std::vector<int> nonreduced, std::string id)
    : entries_(std::move(entries)), nonreduced_(std::move(nonreduced)), id_(std::move(id)) {
  if (!is_gcm(entries_)) throw std::invalid_argument("not a generalized Cartan matrix");
  std::sort(nonreduced_.begin(), nonreduced_.end());
  nonreduced_.erase(std::unique(nonreduced_.begin(), nonreduced_.end()), nonreduced_.end());
  if (nonreduced_.size() > 1) throw std::invalid_argument("at most one nonreduced node");
  for (int v : nonreduced_) {
    if (v < 0 || v >= rank()) throw std::invalid_argument("nonreduced node out of range");
    int degree = 0;
    for (int j = 0; j < rank(); ++j)
      if (j != v && entries_[v][j] != 0) ++degree;
    if (degree > 1) throw std::invalid_argument("nonreduced node must be an end node");
  }
}

GCM GCM::with_id(std::string id) const {
  GCM g = *this;
  g.id_ = std::move(id);
  return g;
}

GCM GCM::principal(std::span<const int> nodes, std::string id) const {
  IntMatrix sub(nodes.size(), std::vector<int>(nodes.size()));
  std::vector<int> nr;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = 0; b < nodes.size(); ++b) sub[a][b] = entries_[nodes[a]][nodes[b]];
    if (std::find(nonreduced_.begin(), nonreduced_.end(), nodes[a]) != nonreduced_.end())
      nr.push_back(static_cast<int>(a));
  }
  return GCM(std::move(sub), std::move(nr), std::move(id));
}

std::vector<std::vector<int>> GCM::components() const {
  std::vector<int> comp(rank(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < rank(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes;
    std::queue<int> q;
    q.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      nodes.push_back(v);
      for (int j = 0; j < rank(); ++j)
        if (comp[j] < 0 && entries_[v][j] != 0) {
          comp[j] = comp[s];
          q.push(j);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

GCM direct_sum(const GCM& a, const GCM& b, std::string id) {
  const int n = a.rank() + b.rank();
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m[i][j] = a(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b(i, j);
  std::vector<int> nr = a.nonreduced();
  for (int v : b.nonreduced()) nr.push_back(a.rank() + v);
  if (id.empty()) id = a.id() + "+" + b.id();
  return GCM(std::move(m), std::move(nr), std::move(id));
}

// ---------------------------------------------------------------- weights

WeightVec WeightVec::zero(std::string basis, int n) { return {std::move(basis), QVector(n), 0}; }

WeightVec WeightVec::fundamental(std::string basis, int n, int i) {
  WeightVec w = zero(std::move(basis), n);
  w.coords.at(i) = 1;
  return w;
}

WeightVec WeightVec::from_ints(std::string basis, std::span<const int> c, int delta) {
  return {std::move(basis), QVector(c.begin(), c.end()), Rational(delta)};
}

bool WeightVec::is_zero() const {
  return delta == 0 && std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; });
}

bool WeightVec::is_integral() const {
  return smtkit::is_integral(delta) &&
         std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return smtkit::is_integral(q); });
}

bool WeightVec::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q >= 0; });
}

namespace {
void check_compatible(const WeightVec& a, const WeightVec& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("weight dimension mismatch");
  if (!a.basis.empty() && !b.basis.empty() && a.basis != b.basis)
    throw std::invalid_argument("weight basis mismatch: " + a.basis + " vs " + b.basis);
}
}  // namespace

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  delta += o.delta;
  if (basis.empty()) basis = o.basis;
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  delta -= o.delta;
  if (basis.empty()) basis = o.basis;
  return *this;
}

WeightVec& WeightVec::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  delta *= s;
  return *this;
}

std::string to_string(const WeightVec& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ",";
    s += to_string(w.coords[i]);
  }
  s += ")";
  if (w.delta != 0) s += "+" + to_string(w.delta) + "d";
  return s;
}

// ---------------------------------------------------------------- tables

namespace {

IntMatrix chain(int n) {
  IntMatrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

void bond(IntMatrix& m, int i, int j) { m[i][j] = m[j][i] = -1; }

IntMatrix finite_matrix(const FinTypeLabel& l) {
  const int n = l.rank;
  IntMatrix m = chain(n);
  switch (l.family) {
    case Family::A: break;
    case Family::B:
    case Family::BC:
      if (n >= 2) m[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case Family::C: m[n - 1][n - 2] = -2; break;  // alpha_n long
    case Family::D:
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      bond(m, n - 3, n - 1);
      break;
    case Family::E: {
      m = IntMatrix(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      bond(m, 0, 2);
      for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1);
      bond(m, 1, 3);
      break;
    }
    case Family::F: m[1][2] = -2; break;  // alpha_2 long, alpha_3 short
    case Family::G: m[1][0] = -3; break;  // alpha_1 short
  }
  return m;
}

}  // namespace

GCM build_cartan(const FinTypeLabel& label) {
  if (!is_valid(label)) throw std::invalid_argument("invalid rank for family: " + label.name());
  std::vector<int> nr;
  if (label.family == Family::BC) nr.push_back(label.rank - 1);
  return GCM(finite_matrix(label), std::move(nr), label.name());
}

GCM build_affine_cartan(std::string_view name_in) {
  static const std::regex re(R"(^([ABCDEFG])_?\{?(\d+)\}?\^\{?\((\d)\)\}?$)");
  std::string s(name_in);
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw std::invalid_argument("unknown affine label: " + s);
  const char fam = mt[1].str()[0];
  const int idx = std::stoi(mt[2].str());
  const int twist = std::stoi(mt[3].str());
  auto fail = [&] { return std::invalid_argument("unknown affine label: " + s); };

  // Builds node 0 + finite part with the given bond data.
  auto extended = [](const IntMatrix& fin, int attach, int row0, int col0) {
    const int n = static_cast<int>(fin.size());
    IntMatrix m(n + 1, std::vector<int>(n + 1, 0));
    m[0][0] = 2;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i + 1][j + 1] = fin[i][j];
    m[0][attach + 1] = row0;
    m[attach + 1][0] = col0;
    return m;
  };

  IntMatrix m;
  std::string canonical;
  if (twist == 1) {
    canonical = std::string(1, fam) + "_" + std::to_string(idx) + "^{(1)}";
    switch (fam) {
      case 'A':
        if (idx < 1) throw fail();
        if (idx == 1) {
          m = {{2, -2}, {-2, 2}};
        } else {
          m = extended(finite_matrix({Family::A, idx}), 0, -1, -1);
          m[0][idx] = m[idx][0] = -1;
        }
        break;
      case 'B':
        if (idx < 3) throw fail();
        m = extended(finite_matrix({Family::B, idx}), 1, -1, -1);
        break;
      case 'C':
        if (idx < 2) throw fail();
        m = extended(finite_matrix({Family::C, idx}), 0, -2, -1);
        break;
      case 'D':
        if (idx < 4) throw fail();
        m = extended(finite_matrix({Family::D, idx}), 1, -1, -1);
        break;
      default: throw fail();
    }
  } else if (twist == 2) {
    canonical = std::string(1, fam) + "_" + std::to_string(idx) + "^{(2)}";
    if (fam == 'A' && idx % 2 == 0) {
      const int n = idx / 2;
      if (n < 1) throw fail();
      if (n == 1)
        m = {{2, -4}, {-1, 2}};
      else
        m = extended(finite_matrix({Family::B, n}), 0, -2, -1);
    } else if (fam == 'A') {
      const int n = (idx + 1) / 2;
      if (n < 3) throw fail();
      m = extended(finite_matrix({Family::C, n}), 1, -1, -1);
    } else if (fam == 'D') {
      const int n = idx - 1;
      if (n < 2) throw fail();
      m = extended(finite_matrix({Family::B, n}), 0, -1, -2);
    } else {
      throw fail();
    }
  } else {
    throw fail();
  }
  return GCM(std::move(m), {}, canonical);
}

// ---------------------------------------------------------------- symmetrizer / classify

std::optional<QVector> symmetrizer(const GCM& m) {
  const int n = m.rank();
  QVector d(n, 0);
  for (const auto& comp : m.components()) {
    d[comp[0]] = 1;
    std::queue<int> q;
    q.push(comp[0]);
    std::vector<bool> seen(n, false);
    seen[comp[0]] = true;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || m(i, j) == 0) continue;
        Rational dj = d[i] * m(i, j) / m(j, i);
        if (!seen[j]) {
          seen[j] = true;
          d[j] = dj;
          q.push(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
    Rational mn = d[comp[0]];
    for (int v : comp) mn = std::min(mn, d[v]);
    for (int v : comp) d[v] /= mn;
  }
  return d;
}

QMatrix symmetrized(const GCM& m, const QVector& d) {
  QMatrix s(m.rank(), QVector(m.rank()));
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j) s[i][j] = d[i] * m(i, j);
  return s;
}

std::string to_string(GcmClass c) {
  switch (c) {
    case GcmClass::Finite: return "Finite";
    case GcmClass::Affine: return "Affine";
    case GcmClass::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace {

// Symmetric elimination: PSD iff every pivot met is >= 0 and a zero pivot
// has a zero row.
bool positive_semidefinite(QMatrix a) {
  const std::size_t n = a.size();
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (a[i][i] < 0) return false;
      if (a[i][i] > 0) {
        p = i;
        break;
      }
    }
    if (p == n) {
      // remaining diagonal all zero: the remaining block must vanish
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && a[i][j] != 0) return false;
      return true;
    }
    done[p] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      Rational f = a[i][p] / a[p][p];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
    }
  }
  return true;
}

}  // namespace

GcmClass classify(const GCM& m) {
  auto d = symmetrizer(m);
  if (!d) throw std::invalid_argument("classify: matrix is not symmetrizable");
  QMatrix s = symmetrized(m, *d);
  const std::size_t n = s.size();
  bool definite = true;
  for (std::size_t k = 1; k <= n && definite; ++k) {
    QMatrix lead(k, QVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = s[i][j];
    if (determinant(lead) <= 0) definite = false;
  }
  if (definite) return GcmClass::Finite;
  if (positive_semidefinite(s) && n - rank(s) == 1) return GcmClass::Affine;
  return GcmClass::Indefinite;
}

// ---------------------------------------------------------------- roots

WeightVec simple_root(const GCM& m, int i, std::span<const Rational> root_delta) {
  WeightVec w = WeightVec::zero(m.id(), m.rank());
  for (int j = 0; j < m.rank(); ++j) w.coords[j] = m(i, j);
  if (!root_delta.empty()) w.delta = root_delta[i];
  return w;
}

std::optional<QVector> root_coordinates(const GCM& m, const WeightVec& w,
                                        std::span<const Rational> root_delta) {
  const int n = m.rank();
  QMatrix rows(n, QVector(n + 1));
  bool has_delta = !root_delta.empty();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n] = has_delta ? root_delta[i] : Rational(0);
  }
  if (rank(rows) < static_cast<std::size_t>(n))
    throw std::invalid_argument("need delta coordinate");
  QVector target = w.coords;
  target.push_back(w.delta);
  return expand_over_rows(rows, target);
}

bool dominant_leq(const WeightVec& lambda, const WeightVec& mu, const GCM& m,
                  std::span<const Rational> root_delta) {
  auto c = root_coordinates(m, mu - lambda, root_delta);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return is_integral(q) && q >= 0; });
}

std::vector<std::vector<int>> positive_roots(const GCM& m) {
  if (!m.nonreduced().empty()) throw std::invalid_argument("positive_roots: reduced type only");
  const int n = m.rank();
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> known;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    known.insert(e);
  }
  // roots are appended in nondecreasing height, so every beta - k alpha_i
  // is already known when beta is processed
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots.size() > 10000) throw std::invalid_argument("positive_roots: not of finite type");
    const std::vector<int> beta = roots[k];
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * m(j, i);
      int p = 0;
      std::vector<int> down = beta;
      while (true) {
        down[i] -= 1;
        if (down[i] < 0 || !known.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  return roots;
}

QVector coroot_coordinates(const GCM& m, std::span<const int> root) {
  auto d = symmetrizer(m);
  if (!d) throw std::invalid_argument("coroot_coordinates: not symmetrizable");
  const int n = m.rank();
  // (a_i, a_j) = m_ij / d_j; |a_j|^2 = 2 / d_j
  Rational norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (root[i] && root[j]) norm += Rational(root[i] * root[j] * m(i, j)) / (*d)[j];
  QVector c(n);
  for (int j = 0; j < n; ++j) c[j] = Rational(root[j]) * (Rational(2) / (*d)[j]) / norm;
  return c;
}

Integer weyl_dim(const GCM& m, const WeightVec& lambda) {
  if (!m.nonreduced().empty()) throw std::invalid_argument("weyl_dim: reduced type only");
  if (classify(m) != GcmClass::Finite) throw std::invalid_argument("weyl_dim: finite type only");
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("weyl_dim: weight must be dominant integral");
  Rational num = 1, den = 1;
  for (const auto& beta : positive_roots(m)) {
    QVector cv = coroot_coordinates(m, beta);
    Rational lr = 0, r = 0;
    for (int j = 0; j < m.rank(); ++j) {
      lr += cv[j] * (lambda.coords[j] + 1);
      r += cv[j];
    }
    num *= lr;
    den *= r;
  }
  Rational q = num / den;
  if (!is_integral(q)) throw std::logic_error("weyl_dim: non-integral result");
  return numer(q);
}

Integer weyl_dim(const FinTypeLabel& label, const WeightVec& lambda) {
  if (!label.reduced()) throw std::invalid_argument("weyl_dim: reduced type only");
  return weyl_dim(build_cartan(label), lambda);
}

std::vector<int> quadratic_multipliers(const FinTypeLabel& label) {
  std::vector<int> q(label.rank, 1);
  switch (label.family) {
    case Family::A:
    case Family::C: break;
    case Family::B:
    case Family::BC: q.back() = 2; break;
    default: throw std::invalid_argument("quadratic basis only for A, B, C, BC");
  }
  return q;
}

std::vector<WeightVec> quadratic_basis(const FinTypeLabel& label) {
  auto q = quadratic_multipliers(label);
  std::vector<WeightVec> out;
  for (int i = 0; i < label.rank; ++i) {
    WeightVec w = WeightVec::fundamental(label.name(), label.rank, i);
    w *= Rational(q[i]);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace smtkit
