#include "smtkit/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smtkit {

std::string word_to_string(std::span<const int> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 0) throw std::invalid_argument("bad word letter: " + item);
    w.push_back(v);
  }
  return w;
}

// ---------------------------------------------------------------- Realization

Realization::Realization(GCM m, QVector root_delta) : gcm_(std::move(m)), root_delta_(std::move(root_delta)) {
  if (root_delta_.empty()) root_delta_.assign(gcm_.rank(), 0);
  if (static_cast<int>(root_delta_.size()) != gcm_.rank())
    throw std::invalid_argument("Realization: root_delta size mismatch");
  for (int i = 0; i < gcm_.rank(); ++i) roots_.push_back(smtkit::simple_root(gcm_, i, root_delta_));
}

WeightVec Realization::rho() const {
  WeightVec w = zero();
  for (auto& c : w.coords) c = 1;
  return w;
}

void Realization::reflect_in_place(int i, WeightVec& lambda) const {
  const Rational k = lambda.coords[i];
  if (k == 0) return;
  const WeightVec& a = roots_[i];
  for (int j = 0; j < rank(); ++j)
    if (a.coords[j] != 0) lambda.coords[j] -= k * a.coords[j];
  if (a.delta != 0) lambda.delta -= k * a.delta;
}

std::optional<QVector> Realization::root_coordinates(const WeightVec& w) const {
  bool has_delta = std::any_of(root_delta_.begin(), root_delta_.end(), [](const Rational& q) { return q != 0; });
  return smtkit::root_coordinates(gcm_, w, has_delta ? std::span<const Rational>(root_delta_)
                                                     : std::span<const Rational>());
}

// ---------------------------------------------------------------- words

WeightVec act(const Realization& r, std::span<const int> word, WeightVec lambda) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= r.rank()) throw std::invalid_argument("word letter out of range");
    r.reflect_in_place(*it, lambda);
  }
  return lambda;
}

Word descend_to_dominant(const Realization& r, WeightVec mu, WeightVec* dominant_out, std::size_t max_steps) {
  Word letters;
  while (true) {
    int i = -1;
    for (int k = 0; k < r.rank(); ++k)
      if (mu.coords[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    if (letters.size() >= max_steps) throw std::runtime_error("descend_to_dominant: step cap exceeded");
    letters.push_back(i);
    r.reflect_in_place(i, mu);
  }
  if (dominant_out) *dominant_out = std::move(mu);
  return letters;
}

Word reduce(const Realization& r, std::span<const int> word) {
  WeightVec p = act(r, word, r.rho());
  return descend_to_dominant(r, std::move(p));
}

bool same_element(const Realization& r, std::span<const int> u, std::span<const int> v) {
  return act(r, u, r.rho()) == act(r, v, r.rho());
}

std::size_t length(const Realization& r, std::span<const int> word) { return reduce(r, word).size(); }

Word longest_element(const Realization& r, std::span<const int> nodes) {
  WeightVec mu = r.rho();
  Word rev;
  while (true) {
    int i = -1;
    for (int k : nodes)
      if (mu.coords[k] > 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    if (rev.size() > 100000) throw std::runtime_error("longest_element: parabolic subgroup is infinite");
    rev.push_back(i);
    r.reflect_in_place(i, mu);
  }
  return Word(rev.rbegin(), rev.rend());
}

// ---------------------------------------------------------------- cosets

CosetSpace::CosetSpace(Realization r, WeightVec base) : r_(std::move(r)), base_(std::move(base)) {
  if (!base_.is_dominant()) throw std::invalid_argument("CosetSpace: base weight must be dominant");
  if (base_.size() != r_.rank()) throw std::invalid_argument("CosetSpace: dimension mismatch");
}

std::vector<int> CosetSpace::parabolic() const {
  std::vector<int> j;
  for (int i = 0; i < r_.rank(); ++i)
    if (base_.coords[i] == 0) j.push_back(i);
  return j;
}

Word CosetSpace::min_word(const WeightVec& pt) const {
  WeightVec dom;
  Word w = descend_to_dominant(r_, pt, &dom);
  if (!(dom == base_)) throw std::invalid_argument("min_word: weight is not in the orbit of the base");
  return w;
}

bool CosetSpace::leq(const WeightVec& u_in, const WeightVec& v_in) const {
  WeightVec u = u_in, v = v_in;
  // lifting property along a left descent of v
  while (true) {
    int i = -1;
    for (int k = 0; k < r_.rank(); ++k)
      if (v.coords[k] < 0) {
        i = k;
        break;
      }
    if (i < 0) return u == v;  // v is the base coset
    if (u.coords[i] < 0) r_.reflect_in_place(i, u);
    r_.reflect_in_place(i, v);
  }
}

std::vector<WeightVec> CosetSpace::lower_interval(const WeightVec& v, std::size_t cap) const {
  Word w = min_word(v);
  std::set<WeightVec> s{base_};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::vector<WeightVec> add;
    for (const auto& x : s) {
      WeightVec y = r_.reflect(*it, x);
      if (!s.count(y)) add.push_back(std::move(y));
    }
    for (auto& y : add) s.insert(std::move(y));
    if (s.size() > cap) throw std::runtime_error("coset interval exceeds cap of " + std::to_string(cap));
  }
  return {s.begin(), s.end()};
}

std::optional<Integer> CosetSpace::reflection_pairing(const WeightVec& u, const WeightVec& v) const {
  WeightVec d = u - v;
  auto c = r_.root_coordinates(d);
  if (!c) return std::nullopt;
  Integer g = 0;
  for (const auto& x : *c) {
    if (!is_integral(x) || x < 0) return std::nullopt;
    g = gcd(g, numer(x));
  }
  if (g == 0) return std::nullopt;
  // beta = d / g must be a positive real root: walk it down to a simple root,
  // carrying u along to read off <u, beta^vee>
  std::vector<Integer> beta(c->size());
  for (std::size_t k = 0; k < c->size(); ++k) beta[k] = numer((*c)[k]) / g;
  WeightVec bw = (Rational(1) / Rational(g)) * d;
  WeightVec uu = u;
  for (int guard = 0; guard < 100000; ++guard) {
    Integer height = 0;
    int nonzero = 0, last = -1;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      height += beta[k];
      if (beta[k] != 0) {
        ++nonzero;
        last = static_cast<int>(k);
      }
    }
    if (nonzero == 1 && height == 1) {
      if (uu.coords[last] != Rational(g)) return std::nullopt;
      return g;
    }
    int i = -1;
    for (int k = 0; k < r_.rank(); ++k)
      if (bw.coords[k] > 0 && beta[k] > 0) {
        // reflecting lowers the height only if the pairing is positive
        i = k;
        break;
      }
    if (i < 0) return std::nullopt;
    Integer p = numer(bw.coords[i]);
    if (!is_integral(bw.coords[i])) return std::nullopt;
    beta[i] -= p;
    if (beta[i] < 0) return std::nullopt;
    r_.reflect_in_place(i, bw);
    r_.reflect_in_place(i, uu);
  }
  return std::nullopt;
}

CosetInterval coset_interval(const CosetSpace& space, const WeightVec& top, std::size_t cap) {
  auto pts = space.lower_interval(top, cap);
  CosetInterval iv;
  std::vector<std::pair<std::size_t, WeightVec>> tagged;
  for (auto& p : pts) tagged.emplace_back(space.length(p), std::move(p));
  std::sort(tagged.begin(), tagged.end());
  for (auto& [len, p] : tagged) {
    iv.index[p] = iv.points.size();
    iv.points.push_back(std::move(p));
    iv.lengths.push_back(len);
  }
  iv.covers_below.resize(iv.points.size());
  for (std::size_t v = 0; v < iv.points.size(); ++v)
    for (std::size_t u = 0; u < v; ++u) {
      if (iv.lengths[u] + 1 != iv.lengths[v]) continue;
      if (!space.leq(iv.points[u], iv.points[v])) continue;
      auto n = space.reflection_pairing(iv.points[u], iv.points[v]);
      if (!n) throw std::logic_error("coset_interval: cover without a reflection");
      iv.covers_below[v].emplace_back(u, *n);
    }
  return iv;
}

// ---------------------------------------------------------------- Demazure

Character demazure_character(const Realization& r, std::span<const int> word, const WeightVec& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("demazure_character: weight must be dominant integral");
  Word w = reduce(r, word);
  Character ch{{lambda, 1}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int i = *it;
    const WeightVec& a = r.simple_root(i);
    Character next;
    for (const auto& [mu, mult] : ch) {
      if (mult == 0) continue;
      long long k = numer(mu.coords[i]).convert_to<long long>();
      if (k >= 0) {
        WeightVec x = mu;
        for (long long j = 0; j <= k; ++j) {
          next[x] += mult;
          x -= a;
        }
      } else if (k <= -2) {
        WeightVec x = mu;
        for (long long j = 1; j <= -k - 1; ++j) {
          x += a;
          next[x] -= mult;
        }
      }
    }
    for (auto it2 = next.begin(); it2 != next.end();)
      it2 = it2->second == 0 ? next.erase(it2) : std::next(it2);
    ch = std::move(next);
  }
  return ch;
}

Integer total_multiplicity(const Character& ch) {
  Integer s = 0;
  for (const auto& [w, m] : ch) s += m;
  return s;
}

// ---------------------------------------------------------------- special elements

Word tau_hat(int m, const ExtendedDatum& d) {
  if (m < 0 || m > d.base_rank()) throw std::invalid_argument("tau_hat: m out of range");
  Word w;
  for (int k = 1; k <= m; ++k) {
    Word prefix(k);
    std::iota(prefix.begin(), prefix.end(), 0);
    prefix.insert(prefix.end(), w.begin(), w.end());
    w = std::move(prefix);
  }
  return w;
}

std::vector<WeightVec> dominant_orbit_reps(const ExtendedDatum& d) {
  Realization r = Realization::of(d);
  std::vector<WeightVec> out;
  for (int m = 0; m <= d.base_rank(); ++m) out.push_back(act(r, tau_hat(m, d), eomega0(d)));
  return out;
}

std::vector<WeightVec> small_orbit(const ExtendedDatum& d) {
  Realization r = Realization::of(d);
  std::set<WeightVec> seen{eomega0(d)};
  std::vector<WeightVec> todo{eomega0(d)};
  while (!todo.empty()) {
    WeightVec x = std::move(todo.back());
    todo.pop_back();
    for (int i = 0; i < d.base_rank(); ++i) {
      WeightVec y = r.reflect(i, x);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
    if (seen.size() > 100000) throw std::runtime_error("small_orbit: orbit too large");
  }
  return {seen.begin(), seen.end()};
}

}  // namespace smtkit
