#include "smtkit/ambient.hpp"

#include <numeric>
#include <stdexcept>

namespace smtkit {

AmbientModel AmbientModel::flip(const FinTypeLabel& h) {
  if (h.family != Family::A && h.family != Family::B && h.family != Family::C)
    throw std::invalid_argument("flip model: factor must be of type A, B or C");
  if (!is_valid(h)) throw std::invalid_argument("flip model: invalid factor " + h.name());
  AmbientModel m;
  m.kind_ = InvolutionKind::Flip;
  m.h_ = h;
  const int l = h.rank;
  GCM factor = build_cartan(h);
  GCM doubled = direct_sum(factor, factor, factor.id() + "+" + factor.id());
  m.fibres_.push_back({0});
  for (int i = 1; i <= l; ++i) m.fibres_.push_back({i, i + l});
  m.partner_.resize(2 * l + 1);
  for (int i = 1; i <= l; ++i) {
    m.partner_[i] = i + l;
    m.partner_[i + l] = i;
  }
  const int q1 = quadratic_multipliers(h)[0];
  WeightVec eps = WeightVec::zero(doubled.id(), 2 * l);
  eps.coords[0] = q1;
  eps.coords[l] = q1;
  m.finish(std::move(doubled), std::move(eps));
  return m;
}

AmbientModel AmbientModel::symmetric_quadrics(int n) {
  if (n < 2) throw std::invalid_argument("symmetric quadrics: n >= 2 required");
  AmbientModel m;
  m.kind_ = InvolutionKind::SymmetricQuadrics;
  m.h_ = FinTypeLabel{Family::A, n - 1};
  GCM base = build_cartan(m.h_);
  for (int i = 0; i < n; ++i) m.fibres_.push_back({i});
  m.partner_.resize(n);
  for (int i = 0; i < n; ++i) m.partner_[i] = i;
  WeightVec eps = WeightVec::zero(base.id(), n - 1);
  eps.coords[0] = 2;
  m.finish(std::move(base), std::move(eps));
  return m;
}

void AmbientModel::finish(GCM base, WeightVec eps) {
  ambient_ = extend_ambient(base, eps);
  restricted_ = extend_restricted(h_);
}

bool AmbientModel::is_split(const WeightVec& w) const {
  for (int a = 0; a < static_cast<int>(partner_.size()); ++a)
    if (w.coords.at(a) != w.coords.at(partner_[a])) return false;
  return true;
}

std::optional<WeightVec> AmbientModel::restrict_weight(const WeightVec& w) const {
  if (w.size() != ambient_.rank()) throw std::invalid_argument("restrict_weight: dimension mismatch");
  if (!is_split(w)) return std::nullopt;
  WeightVec r = WeightVec::zero(restricted_.extended.id(), restricted_.rank());
  for (int i = 0; i < restricted_.rank(); ++i) {
    Rational s = 0;
    for (int a : fibres_[i]) s += w.coords[a];
    r.coords[i] = s / 2;
  }
  r.delta = w.delta;
  return r;
}

WeightVec AmbientModel::lift_weight(const WeightVec& r) const {
  if (r.size() != restricted_.rank()) throw std::invalid_argument("lift_weight: dimension mismatch");
  WeightVec w = WeightVec::zero(ambient_.extended.id(), ambient_.rank());
  for (int i = 0; i < restricted_.rank(); ++i) {
    const auto& f = fibres_[i];
    for (int a : f) w.coords[a] = 2 * r.coords[i] / static_cast<long>(f.size());
  }
  w.delta = r.delta;
  return w;
}

WeightVec AmbientModel::sigma(const WeightVec& w) const {
  WeightVec out = w;
  for (int a = 0; a < static_cast<int>(partner_.size()); ++a) out.coords[a] = -w.coords[partner_[a]];
  out.delta = -w.delta;
  return out;
}

Word AmbientModel::lift_reflection(int i) const {
  if (i < 0 || i > rank()) throw std::invalid_argument("lift_reflection: node out of range");
  Realization r = Realization::of(ambient_);
  return longest_element(r, fibres_[i]);
}

Word AmbientModel::lift_word(std::span<const int> rw) const {
  Word out;
  for (int i : rw) {
    Word w = lift_reflection(i);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

WeightVec AmbientModel::eps_image(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("eps_image: index out of range");
  WeightVec w = WeightVec::zero(ambient_.base.id(), ambient_.base_rank());
  if (kind_ == InvolutionKind::SymmetricQuadrics) {
    w.coords[i - 1] = 2;
    return w;
  }
  const int q = quadratic_multipliers(h_)[i - 1];
  w.coords[i - 1] = q;
  w.coords[i - 1 + rank()] = q;
  return w;
}

WeightVec AmbientModel::eps_image_extended(int i) const {
  WeightVec b = eps_image(i);
  WeightVec w = WeightVec::zero(ambient_.extended.id(), ambient_.rank());
  for (int a = 0; a < b.size(); ++a) w.coords[a + 1] = b.coords[a];
  return w;
}

GCM AmbientModel::reduced_cartan() const {
  Realization r = Realization::of(ambient_);
  IntMatrix m(restricted_.rank(), std::vector<int>(restricted_.rank(), 0));
  for (int i = 0; i < restricted_.rank(); ++i) {
    const WeightVec& a = r.simple_root(fibres_[i].front());
    auto row = restrict_weight(a - sigma(a));
    if (!row) throw std::logic_error("reduced_cartan: alpha - sigma(alpha) is not split");
    for (int j = 0; j < restricted_.rank(); ++j) {
      if (!is_integral(row->coords[j])) throw std::logic_error("reduced_cartan: non-integral entry");
      m[i][j] = numer(row->coords[j]).convert_to<int>();
    }
  }
  return GCM(std::move(m), {}, "red(" + ambient_.extended.id() + ")");
}

QVector AmbientModel::reduced_root_delta() const {
  Realization r = Realization::of(ambient_);
  QVector d;
  for (int i = 0; i < restricted_.rank(); ++i) {
    const WeightVec& a = r.simple_root(fibres_[i].front());
    d.push_back((a - sigma(a)).delta);
  }
  return d;
}

std::vector<int> AmbientModel::finite_nodes() const {
  std::vector<int> n(ambient_.base_rank());
  std::iota(n.begin(), n.end(), 1);
  return n;
}

Word AmbientModel::tau_hat(int m) const { return lift_word(smtkit::tau_hat(m, restricted_)); }

Word AmbientModel::tau(int m) const {
  Realization r = Realization::of(ambient_);
  Word w = longest_element(r, finite_nodes());
  Word t = tau_hat(m);
  w.insert(w.end(), t.begin(), t.end());
  return w;
}

Word restricted_tau(const ExtendedDatum& d, int m) {
  Realization r = Realization::of(d);
  std::vector<int> nodes(d.base_rank());
  std::iota(nodes.begin(), nodes.end(), 1);
  Word w = longest_element(r, nodes);
  Word t = tau_hat(m, d);
  w.insert(w.end(), t.begin(), t.end());
  return w;
}

}  // namespace smtkit
