#include "gtbcd/gl_kernel.hpp"

#include <string>

namespace gtbcd {

namespace {

// Position of a row index within a row of the pair: index = position - n,
// where n is the length of the upper row.
std::size_t position(const GlRowPair& rows, int index, std::size_t length, const char* what) {
  const int n = static_cast<int>(rows.upper.size());
  const int p = index + n;
  if (p < 0 || p >= static_cast<int>(length)) {
    throw DomainError(std::string(what) + " index " + std::to_string(index) + " outside the row");
  }
  return static_cast<std::size_t>(p);
}

// num / den, where a vanishing numerator wins over a vanishing denominator
// (a zero factor encodes the selection rule).
Rational ratio(const Rational& num, const Rational& den, const char* what) {
  if (num == 0) return 0;
  if (den == 0) throw DomainError(std::string(what) + ": vanishing denominator");
  return num / den;
}

AlgebraicValue root_of(const Rational& square, const char* what) {
  if (square < 0) throw DomainError(std::string(what) + ": negative radicand " + to_string(square));
  return AlgebraicValue::sqrt_of(square);
}

Rational pos_diff(std::size_t p, std::size_t q) { return Rational(static_cast<long>(p) - static_cast<long>(q)); }

}  // namespace

void GlRowPair::check() const {
  if (upper.empty() || lower.size() + 1 != upper.size()) {
    throw ShapeError("gl row pair needs rows of lengths k and k-1");
  }
}

bool GlRowPair::interlaces() const {
  check();
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  }
  return true;
}

Rational red_me_squared(const GlRowPair& rows, int i1) {
  rows.check();
  const auto& up = rows.upper;
  const auto& lo = rows.lower;
  const std::size_t p = position(rows, i1, lo.size(), "red_me");
  Rational num = -1;
  for (std::size_t q = 0; q < up.size(); ++q) num *= up[q] - lo[p] + pos_diff(p, q) + 1;
  Rational den = 1;
  for (std::size_t q = 0; q < lo.size(); ++q) {
    if (q != p) den *= lo[q] - lo[p] + pos_diff(p, q) + 1;
  }
  return ratio(num, den, "red_me");
}

Rational wigner_squared(const GlRowPair& rows, int i) {
  rows.check();
  const auto& up = rows.upper;
  const auto& lo = rows.lower;
  const std::size_t p = position(rows, i, up.size(), "wigner");
  Rational num = 1;
  for (std::size_t q = 0; q < lo.size(); ++q) num *= lo[q] - up[p] + pos_diff(p, q);
  Rational den = 1;
  for (std::size_t q = 0; q < up.size(); ++q) {
    if (q != p) den *= up[q] - up[p] + pos_diff(p, q);
  }
  return ratio(num, den, "wigner");
}

Rational red_wigner_squared(const GlRowPair& rows, int i1, int i2) {
  rows.check();
  const auto& up = rows.upper;
  const auto& lo = rows.lower;
  const std::size_t p1 = position(rows, i1, up.size(), "red_wigner upper");
  const std::size_t p2 = position(rows, i2, lo.size(), "red_wigner lower");
  Rational num = 1;
  Rational den = 1;
  for (std::size_t q = 0; q < lo.size(); ++q) {
    if (q != p2) num *= lo[q] - up[p1] + pos_diff(p1, q);
  }
  for (std::size_t q = 0; q < up.size(); ++q) {
    if (q != p1) den *= up[q] - up[p1] + pos_diff(p1, q);
  }
  for (std::size_t q = 0; q < up.size(); ++q) {
    if (q != p1) num *= up[q] - lo[p2] + pos_diff(p2, q) + 1;
  }
  for (std::size_t q = 0; q < lo.size(); ++q) {
    if (q != p2) den *= lo[q] - lo[p2] + pos_diff(p2, q) + 1;
  }
  return ratio(num, den, "red_wigner");
}

AlgebraicValue red_me(const GlRowPair& rows, int i1) { return root_of(red_me_squared(rows, i1), "red_me"); }

AlgebraicValue wigner(const GlRowPair& rows, int i) { return root_of(wigner_squared(rows, i), "wigner"); }

AlgebraicValue red_wigner(const GlRowPair& rows, int i1, int i2) {
  AlgebraicValue v = root_of(red_wigner_squared(rows, i1, i2), "red_wigner");
  return i2 - i1 < 0 ? -v : v;
}

namespace {

void check_level(const GlPattern& pattern, int k) {
  if (!gl_valid(pattern) || pattern.rows.empty()) throw ShapeError("invalid gl pattern " + pattern.to_string());
  const int top = static_cast<int>(pattern.rows.size());
  if (k < 2 || k > top) throw DomainError("gl level " + std::to_string(k) + " outside 2.." + std::to_string(top));
}

// Row of length r of a gl_N pattern (rows[0] has length N).
std::size_t row_slot(const GlPattern& pattern, int r) { return pattern.rows.size() - static_cast<std::size_t>(r); }

std::vector<std::pair<GlPattern, Rational>> shift_row(const GlPattern& pattern, int k, int step) {
  check_level(pattern, k);
  std::vector<std::pair<GlPattern, Rational>> out;
  const std::size_t slot = row_slot(pattern, k - 1);
  for (std::size_t p = 0; p < pattern.rows[slot].size(); ++p) {
    GlPattern target = pattern;
    target.rows[slot][p] += step;
    if (!gl_valid(target)) continue;
    const int n = k;  // length of the upper row of the pair
    Rational c;
    if (step < 0) {
      c = red_me_squared({pattern.rows[row_slot(pattern, k)], pattern.rows[slot]}, static_cast<int>(p) - n);
    } else if (k - 1 >= 2) {
      c = wigner_squared({target.rows[slot], target.rows[row_slot(target, k - 2)]}, static_cast<int>(p) - (k - 1));
    } else {
      c = 1;
    }
    if (c != 0) out.emplace_back(std::move(target), c);
  }
  return out;
}

}  // namespace

std::vector<std::pair<GlPattern, Rational>> gl_gt_lowering(const GlPattern& pattern, int k) {
  return shift_row(pattern, k, -1);
}

std::vector<std::pair<GlPattern, Rational>> gl_gt_raising(const GlPattern& pattern, int k) {
  return shift_row(pattern, k, +1);
}

}  // namespace gtbcd
