#include "gtbcd/linalg.hpp"

namespace gtbcd {

std::vector<std::size_t> rref(DenseMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < columns; ++k) m[r][k] *= inv;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][c] == 0) continue;
      const Rational f = m[q][c];
      for (std::size_t k = c; k < columns; ++k) {
        if (m[r][k] != 0) m[q][k] -= f * m[r][k];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(DenseMatrix m, std::size_t columns) {
  const auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(columns, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (a == 0) return;
  for (const auto& [i, v] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * v);
    } else {
      it->second += a * v;
      if (it->second == 0) y.erase(it);
    }
  }
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  SparseVector y;
  if (a == 0) return y;
  for (const auto& [i, v] : x) y.emplace(i, a * v);
  return y;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    const Rational f = it->second / row.at(pivot);
    axpy(v, -f, row);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.begin()->first;
  rows_.emplace_back(pivot, std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const { return reduce(v).empty(); }

}  // namespace gtbcd
