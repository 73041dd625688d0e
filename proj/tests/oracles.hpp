#pragma once
// Independent oracles for the tests, written from textbook root data without
// using the library's root-system code.

#include <vector>

#include "gtbcd/lie.hpp"
#include "gtbcd/numerics.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd::oracle {

// Positive roots in the basis e_1 > e_2 > ... > e_n, which is the weight
// order [m_{-n}, ..., m_{-1}].
inline std::vector<std::vector<Rational>> positive_roots(Family family, int n) {
  std::vector<std::vector<Rational>> roots;
  auto unit = [n](int i, int a, int j, int b) {
    std::vector<Rational> v(n, Rational(0));
    v[i] += a;
    if (j >= 0) v[j] += b;
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(unit(i, 1, j, -1));
      if (family != Family::A) roots.push_back(unit(i, 1, j, 1));
    }
    if (family == Family::B) roots.push_back(unit(i, 1, -1, 0));
    if (family == Family::C) roots.push_back(unit(i, 2, -1, 0));
  }
  return roots;
}

inline std::vector<Rational> half_sum(Family family, int n) {
  std::vector<Rational> rho(n, Rational(0));
  for (const auto& a : positive_roots(family, n))
    for (int k = 0; k < n; ++k) rho[k] += a[k] / 2;
  return rho;
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Weyl dimension formula prod <lambda + rho, alpha> / <rho, alpha>.
inline Rational weyl_dimension(Family family, const std::vector<Rational>& lambda) {
  const int n = static_cast<int>(lambda.size());
  const auto rho = half_sum(family, n);
  std::vector<Rational> shifted = lambda;
  for (int k = 0; k < n; ++k) shifted[k] += rho[k];
  Rational d = 1;
  for (const auto& a : positive_roots(family, n)) d *= dot(shifted, a) / dot(rho, a);
  return d;
}

inline Rational casimir(Family family, const std::vector<Rational>& lambda) {
  const auto rho = half_sum(family, static_cast<int>(lambda.size()));
  std::vector<Rational> s = lambda;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] += 2 * rho[k];
  return dot(lambda, s);
}

// Dominant weights of a family and rank with entries in {-2..2} (and
// half-odd entries for spinors when `spinors`), restricted to a maximum
// dimension.
inline std::vector<Weight> small_dominant_weights(Family family, int n, bool spinors, long max_dim) {
  std::vector<Weight> out;
  std::vector<Rational> values;
  for (int k = -4; k <= 4; ++k) {
    if (k % 2 == 0) values.emplace_back(k / 2);
    else if (spinors) values.emplace_back(k, 2);
  }
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Weight w;
    for (int k = 0; k < n; ++k) w.push_back(values[idx[k]]);
    if (is_dominant(AlgebraLabel{family, n}, w) && weyl_dimension(family, w) <= max_dim) out.push_back(w);
    int k = 0;
    while (k < n && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace gtbcd::oracle
