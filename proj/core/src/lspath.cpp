#include "smtkit/lspath.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace smtkit {

WeightVec LSPath::endpoint() const {
  WeightVec e = WeightVec::zero(shape.basis, shape.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) e += (cuts[i + 1] - cuts[i]) * dirs[i];
  return e;
}

std::vector<WeightVec> LSPath::breakpoints() const {
  std::vector<WeightVec> out{WeightVec::zero(shape.basis, shape.size())};
  for (std::size_t i = 0; i < dirs.size(); ++i) out.push_back(out.back() + (cuts[i + 1] - cuts[i]) * dirs[i]);
  return out;
}

LSPath straight_path(const WeightVec& shape, const WeightVec& dir) { return LSPath{shape, {dir}, {0, 1}}; }

std::string to_string(const LSPath& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dirs.size(); ++i) s += (i ? " > " : "") + to_string(p.dirs[i]);
  s += "; ";
  for (std::size_t i = 0; i < p.cuts.size(); ++i) s += (i ? ", " : "") + to_string(p.cuts[i]);
  return s + ")";
}

// ---------------------------------------------------------------- PathModel

PathModel::PathModel(const Realization& r, const WeightVec& shape, const WeightVec& top, EnumerationOptions opts)
    : space_(r, shape), shape_(shape), opts_(opts) {
  interval_ = coset_interval(space_, top, opts.interval_cap);
  std::set<Integer> pairings;
  for (const auto& cov : interval_.covers_below)
    for (const auto& [u, n] : cov) pairings.insert(n);
  std::set<Rational> cuts;
  for (const auto& n : pairings) {
    if (n > opts.denominator_cap)
      throw DenominatorCapError("LS-path cut denominator " + to_string(n) + " exceeds cap " +
                                std::to_string(opts.denominator_cap));
    const long d = n.convert_to<long>();
    for (long k = 1; k < d; ++k) cuts.insert(Rational(k, d));
  }
  cuts_.assign(cuts.begin(), cuts.end());

  const std::size_t n = interval_.points.size();
  const std::size_t words = (n + 63) / 64;
  reach_.assign(cuts_.size(), std::vector<Bits>(n, Bits(words, 0)));
  for (std::size_t c = 0; c < cuts_.size(); ++c) {
    auto& table = reach_[c];
    for (std::size_t v = 0; v < n; ++v)  // points are sorted by length
      for (const auto& [u, pair] : interval_.covers_below[v]) {
        if (!is_integral(cuts_[c] * Rational(pair))) continue;
        table[v][u / 64] |= std::uint64_t{1} << (u % 64);
        for (std::size_t k = 0; k < words; ++k) table[v][k] |= table[u][k];
      }
  }
}

bool PathModel::reach(std::size_t c, std::size_t from, std::size_t to) const {
  return (reach_[c][from][to / 64] >> (to % 64)) & 1u;
}

template <class F>
void PathModel::walk(F&& emit) const {
  const std::size_t n = interval_.points.size();
  std::vector<std::size_t> dirs, cut_idx;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t x, std::size_t next_cut) {
    emit(dirs, cut_idx);
    for (std::size_t c = next_cut; c < cuts_.size(); ++c)
      for (std::size_t y = 0; y < n; ++y) {
        if (!reach(c, x, y)) continue;
        dirs.push_back(y);
        cut_idx.push_back(c);
        rec(y, c + 1);
        dirs.pop_back();
        cut_idx.pop_back();
      }
  };
  for (std::size_t x = 0; x < n; ++x) {
    dirs.assign(1, x);
    cut_idx.clear();
    rec(x, 0);
  }
}

std::vector<LSPath> PathModel::enumerate() const {
  std::vector<LSPath> out;
  walk([&](const std::vector<std::size_t>& dirs, const std::vector<std::size_t>& cut_idx) {
    if (out.size() >= opts_.path_cap) throw std::runtime_error("LS-path enumeration exceeds path cap");
    LSPath p;
    p.shape = shape_;
    for (auto d : dirs) p.dirs.push_back(interval_.points[d]);
    p.cuts.push_back(0);
    for (auto c : cut_idx) p.cuts.push_back(cuts_[c]);
    p.cuts.push_back(1);
    out.push_back(std::move(p));
  });
  return out;
}

std::size_t PathModel::count() const {
  const std::size_t n = interval_.points.size();
  const std::size_t k = cuts_.size();
  // memo[x][c]: paths continuing from direction x with next cut index >= c
  std::vector<std::vector<std::size_t>> memo(n, std::vector<std::size_t>(k + 1, 0));
  for (std::size_t x = 0; x < n; ++x)  // lower points first
    for (std::size_t c = k + 1; c-- > 0;) {
      std::size_t total = 1;
      for (std::size_t cc = c; cc < k; ++cc)
        for (std::size_t y = 0; y < x; ++y)
          if (reach(cc, x, y)) total += memo[y][cc + 1];
      memo[x][c] = total;
    }
  std::size_t sum = 0;
  for (std::size_t x = 0; x < n; ++x) sum += memo[x][0];
  return sum;
}

bool PathModel::a_chain(const WeightVec& upper, const WeightVec& lower, const Rational& a) const {
  auto iu = interval_.index.find(upper);
  auto il = interval_.index.find(lower);
  if (iu == interval_.index.end() || il == interval_.index.end()) return false;
  std::vector<bool> seen(interval_.points.size(), false);
  std::deque<std::size_t> todo{iu->second};
  while (!todo.empty()) {
    std::size_t v = todo.front();
    todo.pop_front();
    for (const auto& [u, n] : interval_.covers_below[v]) {
      if (seen[u] || !is_integral(a * Rational(n))) continue;
      if (u == il->second) return true;
      seen[u] = true;
      todo.push_back(u);
    }
  }
  return false;
}

bool PathModel::is_lspath(const LSPath& p) const {
  if (!(p.shape == shape_) || p.dirs.empty() || p.cuts.size() != p.dirs.size() + 1) return false;
  if (p.cuts.front() != 0 || p.cuts.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < p.cuts.size(); ++i)
    if (!(p.cuts[i] < p.cuts[i + 1])) return false;
  for (const auto& d : p.dirs)
    if (!interval_.index.count(d)) return false;
  for (std::size_t i = 0; i + 1 < p.dirs.size(); ++i)
    if (!a_chain(p.dirs[i], p.dirs[i + 1], p.cuts[i + 1])) return false;
  return true;
}

bool is_lspath(const Realization& r, const LSPath& p, EnumerationOptions opts) {
  if (p.dirs.empty()) return false;
  try {
    opts.denominator_cap = std::max(opts.denominator_cap, 1000);
    PathModel model(r, p.shape, p.dirs.front(), opts);
    return model.is_lspath(p);
  } catch (const std::invalid_argument&) {
    return false;  // a direction outside the orbit of the shape
  }
}

Integer d_degree(const Realization& r, const LSPath& p) {
  auto c = r.root_coordinates(p.shape - p.endpoint());
  if (!c || !is_integral((*c)[0])) throw std::invalid_argument("d_degree: endpoint not in shape - root lattice");
  return numer((*c)[0]);
}

bool is_dominant_on(const LSPath& p, std::span<const int> nodes) {
  for (const auto& b : p.breakpoints())
    for (int i : nodes)
      if (b.coords.at(i) < 0) return false;
  return true;
}

bool path_leq(const CosetSpace& space, const LSPath& pi, const LSPath& eta) {
  if (!(pi.shape == eta.shape)) throw std::invalid_argument("path_leq: shape mismatch");
  return space.leq(pi.max_dir(), eta.min_dir());
}

bool is_standard_above(const CosetSpace& space, std::span<const LSPath> mono) {
  for (std::size_t i = 0; i + 1 < mono.size(); ++i)
    if (!path_leq(space, mono[i], mono[i + 1])) return false;
  return true;
}

// ---------------------------------------------------------------- finite W

FiniteWeylGroup::FiniteWeylGroup(Realization r, std::size_t cap) : r_(std::move(r)) {
  const WeightVec rho = r_.rho();
  std::map<WeightVec, std::size_t> index{{rho, 0}};
  elements_.push_back(rho);
  for (std::size_t k = 0; k < elements_.size(); ++k)
    for (int i = 0; i < r_.rank(); ++i) {
      WeightVec y = r_.reflect(i, elements_[k]);
      if (index.emplace(y, elements_.size()).second) {
        elements_.push_back(std::move(y));
        if (elements_.size() > cap) throw std::runtime_error("Weyl group exceeds cap (infinite type?)");
      }
    }
  CosetSpace space(r_, rho);
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) leq_[u][v] = space.leq(elements_[u], elements_[v]);
}

Word FiniteWeylGroup::word(std::size_t w) const {
  // descent letters, in order, spell w leftmost first
  return descend_to_dominant(r_, elements_.at(w));
}

WeightVec FiniteWeylGroup::act_element(std::size_t w, const WeightVec& lambda) const {
  return act(r_, word(w), lambda);
}

std::vector<std::size_t> FiniteWeylGroup::fibre(const WeightVec& shape, const WeightVec& point) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < elements_.size(); ++w)
    if (act_element(w, shape) == point) out.push_back(w);
  return out;
}

bool is_standard_below(const FiniteWeylGroup& wg, std::span<const TypedPath> mono) {
  std::vector<std::size_t> order(mono.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mono[a].type < mono[b].type; });

  std::map<std::pair<WeightVec, WeightVec>, std::vector<std::size_t>> fibre_cache;
  auto fibre = [&](const WeightVec& shape, const WeightVec& pt) -> const std::vector<std::size_t>& {
    auto key = std::make_pair(shape, pt);
    auto it = fibre_cache.find(key);
    if (it == fibre_cache.end()) it = fibre_cache.emplace(key, wg.fibre(shape, pt)).first;
    return it->second;
  };

  auto try_order = [&](const std::vector<std::size_t>& ord) {
    std::vector<std::pair<const WeightVec*, const WeightVec*>> seq;
    for (auto k : ord) {
      const auto& p = mono[k].path;
      for (auto it = p.dirs.rbegin(); it != p.dirs.rend(); ++it) seq.emplace_back(&p.shape, &*it);
    }
    std::function<bool(std::size_t, std::optional<std::size_t>)> rec = [&](std::size_t pos,
                                                                            std::optional<std::size_t> prev) {
      if (pos == seq.size()) return true;
      for (auto w : fibre(*seq[pos].first, *seq[pos].second))
        if ((!prev || wg.leq(*prev, w)) && rec(pos + 1, w)) return true;
      return false;
    };
    return rec(0, std::nullopt);
  };

  // permute within blocks of equal type
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && mono[order[j]].type == mono[order[i]].type) ++j;
    blocks.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::function<bool(std::size_t)> perm = [&](std::size_t b) {
    if (b == blocks.size()) return try_order(order);
    auto [lo, hi] = blocks[b];
    do {
      if (perm(b + 1)) return true;
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    return false;
  };
  return perm(0);
}

// ---------------------------------------------------------------- lift

LSPath lift_path(const AmbientModel& model, const TypedPath& tp) {
  const auto& amb = model.ambient();
  if (!(tp.path.shape == model.eps_image(tp.type))) throw std::invalid_argument("lift_path: shape is not eps_i");
  Realization base(amb.base);
  CosetSpace space(base, tp.path.shape);
  Realization ar = Realization::of(amb);
  const WeightVec w0 = WeightVec::fundamental(amb.extended.id(), amb.rank(), 0);
  const WeightVec hat = act(ar, model.tau_hat(tp.type), w0);
  LSPath out;
  out.shape = w0;
  out.cuts = tp.path.cuts;
  for (const auto& x : tp.path.dirs) {
    Word w = space.min_word(x);
    for (auto& letter : w) ++letter;  // base node i is ambient node i + 1
    out.dirs.push_back(act(ar, w, hat));
  }
  return out;
}

// ---------------------------------------------------------------- tensor

Integer tensor_multiplicity(const GCM& m, const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu) {
  if (classify(m) != GcmClass::Finite) throw std::invalid_argument("tensor_multiplicity: finite type only");
  Realization r(m);
  std::vector<int> all(m.rank());
  std::iota(all.begin(), all.end(), 0);
  const WeightVec low = act(r, longest_element(r, all), lambda);
  PathModel model(r, lambda, low);
  const WeightVec target = nu - mu;
  Integer count = 0;
  for (const auto& p : model.enumerate()) {
    if (!(p.endpoint() == target)) continue;
    bool ok = true;
    for (const auto& b : p.breakpoints())
      if (!(mu + b).is_dominant()) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace smtkit
