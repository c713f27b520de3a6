#pragma once

// Reference computations written independently of the library algorithms.
// They share only the data types and the Cartan matrices.

#include "smtkit/cartan.hpp"
#include "smtkit/linalg.hpp"
#include "smtkit/weyl.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace smtkit;

// s_i(lambda) straight from the Cartan matrix, finite type only.
inline WeightVec reflect(const GCM& m, int i, WeightVec w) {
  const Rational c = w.coords[i];
  for (int j = 0; j < m.rank(); ++j) w.coords[j] -= c * m(i, j);
  return w;
}

// Size of the Weyl group orbit of rho (= |W|) by breadth-first search.
inline std::size_t weyl_order(const GCM& m) {
  std::vector<int> ones(m.rank(), 1);
  std::set<WeightVec> seen{WeightVec::from_ints(m.id(), ones)};
  std::vector<WeightVec> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    WeightVec w = todo.back();
    todo.pop_back();
    for (int i = 0; i < m.rank(); ++i) {
      WeightVec v = reflect(m, i, w);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen.size();
}

// dim V(lambda) for SL(n+1): prod_{i<j} (l_i + ... + l_{j-1} + j - i) / (j - i).
inline Integer sl_dim(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  Rational d = 1;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int s = 0;
      for (int k = i; k < j; ++k) s += lambda[k];
      d *= Rational(s + j - i, j - i);
    }
  return numer(d);
}

// Full character of V(lambda) by the Demazure operator recursion on a
// reduced word of the longest element, computed by hand here from the
// Cartan matrix (no library Weyl-group code).
inline std::map<WeightVec, Integer> demazure_op(const GCM& m, int i, const std::map<WeightVec, Integer>& ch) {
  std::map<WeightVec, Integer> out;
  for (const auto& [mu, c] : ch) {
    const Integer n = numer(mu.coords[i]);
    WeightVec alpha = WeightVec::zero(mu.basis, m.rank());
    for (int j = 0; j < m.rank(); ++j) alpha.coords[j] = m(i, j);
    if (n >= 0) {
      WeightVec x = mu;
      for (Integer k = 0; k <= n; ++k) {
        out[x] += c;
        x -= alpha;
      }
    } else {
      WeightVec x = mu + alpha;
      for (Integer k = 0; k < -n - 1; ++k) {
        out[x] -= c;
        x += alpha;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Longest-element word found by repeatedly applying any simple reflection
// that makes rho's image less dominant.
inline std::vector<int> longest_word(const GCM& m) {
  std::vector<int> ones(m.rank(), 1);
  WeightVec w = WeightVec::from_ints(m.id(), ones);
  std::vector<int> word;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < m.rank(); ++i)
      if (w.coords[i] > 0) {
        w = reflect(m, i, w);
        word.push_back(i);
        moved = true;
        break;
      }
  }
  return word;  // applied in push order, so the word reads right to left
}

inline std::map<WeightVec, Integer> character(const GCM& m, const WeightVec& lambda) {
  std::map<WeightVec, Integer> ch{{lambda, 1}};
  for (int i : longest_word(m)) ch = demazure_op(m, i, ch);
  return ch;
}

inline Integer dimension(const std::map<WeightVec, Integer>& ch) {
  Integer d = 0;
  for (const auto& kv : ch) d += kv.second;
  return d;
}

// Multiplicity of V(nu) in V(lambda) x V(mu) by peeling highest weights off
// the product character.
inline Integer tensor_mult(const GCM& m, const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu) {
  std::map<WeightVec, Integer> prod;
  const auto a = character(m, lambda), b = character(m, mu);
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) prod[x + y] += cx * cy;
  // height in simple-root coordinates: w = c A, so c = w A^{-1}
  QMatrix a_inv = *inverse(to_qmatrix(m.entries()));
  auto height = [&](const WeightVec& w) {
    Rational h = 0;
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) h += w.coords[j] * a_inv[j][i];
    return h;
  };
  Integer result = 0;
  while (!prod.empty()) {
    // the highest surviving weight is a highest weight of a constituent
    auto top = prod.begin();
    for (auto it = prod.begin(); it != prod.end(); ++it)
      if (height(it->first) > height(top->first)) top = it;
    const WeightVec hw = top->first;
    const Integer c = top->second;
    if (hw == nu) result = c;
    for (const auto& [x, k] : character(m, hw)) prod[x] -= c * k;
    std::erase_if(prod, [](const auto& kv) { return kv.second == 0; });
  }
  return result;
}

inline std::mt19937_64 rng(unsigned long long seed = 20240611) { return std::mt19937_64(seed); }

}  // namespace oracle
