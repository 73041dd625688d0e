#include "gtbcd/numerics.hpp"

#include <cctype>
#include <cmath>
#include <mutex>
#include <sstream>

namespace gtbcd {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&]() { return ShapeError("not a rational number: '" + text + "'"); };
  if (s.empty()) throw bad();
  const auto slash = s.find('/');
  auto check_int = [&](const std::string& part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) throw bad();
    for (std::size_t k = start; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) throw bad();
    }
  };
  const std::string num = s.substr(0, slash);
  check_int(num, true);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(num[0] == '+' ? num.substr(1) : num));
  } else {
    const std::string den = s.substr(slash + 1);
    check_int(den, false);
    Integer d(den);
    if (d == 0) throw bad();
    q = Rational(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::mutex g_sqf_mutex;
std::map<Integer, std::pair<Integer, Integer>>& sqf_cache() {
  static std::map<Integer, std::pair<Integer, Integer>> cache;
  return cache;
}

std::pair<Integer, Integer> compute_square_free(Integer m) {
  Integer s = 1;
  Integer r = 1;
  auto strip = [&](unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) s *= p;
    if (count % 2 == 1) r *= p;
  };
  constexpr unsigned long kTrialLimit = 1000000UL;
  unsigned long p = 2;
  strip(2);
  for (p = 3; p <= kTrialLimit; p += 2) {
    if (Integer(p) * p > m) break;
    strip(p);
  }
  if (m == 1) return {s, r};
  if (Integer(p) * p > m) {  // m is prime
    r *= m;
    return {s, r};
  }
  // m has no prime factor <= kTrialLimit.
  if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    s *= root;
    return {s, r};
  }
  const Integer limit_cubed = Integer(kTrialLimit) * kTrialLimit * kTrialLimit;
  if (m < limit_cubed) {  // m is a prime or a product of two distinct primes
    r *= m;
    return {s, r};
  }
  for (p = kTrialLimit + 1; Integer(p) * p <= m; p += 2) strip(p);
  if (m > 1) r *= m;
  return {s, r};
}

}  // namespace

std::pair<Integer, Integer> square_free_decomposition(const Integer& n) {
  if (n <= 0) throw DomainError("square_free_decomposition requires a positive integer");
  if (n < 4) return {Integer(1), n};
  {
    std::lock_guard<std::mutex> lock(g_sqf_mutex);
    auto it = sqf_cache().find(n);
    if (it != sqf_cache().end()) return it->second;
  }
  auto result = compute_square_free(n);
  std::lock_guard<std::mutex> lock(g_sqf_mutex);
  sqf_cache().emplace(n, result);
  return result;
}

AlgebraicValue::AlgebraicValue(const Rational& q) {
  if (q == 0) return;
  Rational c(q);
  c.canonicalize();
  terms_.emplace(Integer(1), c);
}

AlgebraicValue::AlgebraicValue(long q) : AlgebraicValue(Rational(q)) {}

AlgebraicValue AlgebraicValue::sqrt_of(const Rational& q) {
  if (q < 0) throw DomainError("sqrt_of: negative argument " + gtbcd::to_string(q));
  if (q == 0) return {};
  Rational qc(q);
  qc.canonicalize();
  // sqrt(p/d) = sqrt(p*d)/d
  const Integer pd = qc.get_num() * qc.get_den();
  auto [s, r] = square_free_decomposition(pd);
  Rational coeff(s, qc.get_den());
  coeff.canonicalize();
  AlgebraicValue v;
  v.terms_.emplace(r, coeff);
  return v;
}

AlgebraicValue AlgebraicValue::term(const Rational& coeff, const Integer& radicand) {
  if (radicand <= 0) throw DomainError("term: radicand must be positive");
  AlgebraicValue v;
  if (coeff == 0) return v;
  auto [s, r] = square_free_decomposition(radicand);
  Rational c = coeff * Rational(s);
  c.canonicalize();
  v.terms_.emplace(r, c);
  return v;
}

bool AlgebraicValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

void AlgebraicValue::add_term(const Integer& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

AlgebraicValue AlgebraicValue::operator-() const {
  AlgebraicValue v(*this);
  for (auto& [r, c] : v.terms_) c = -c;
  return v;
}

AlgebraicValue& AlgebraicValue::operator+=(const AlgebraicValue& other) {
  for (const auto& [r, c] : other.terms_) add_term(r, c);
  return *this;
}

AlgebraicValue& AlgebraicValue::operator-=(const AlgebraicValue& other) {
  for (const auto& [r, c] : other.terms_) add_term(r, -c);
  return *this;
}

AlgebraicValue operator*(const AlgebraicValue& a, const AlgebraicValue& b) {
  AlgebraicValue out;
  for (const auto& [ra, ca] : a.terms_) {
    for (const auto& [rb, cb] : b.terms_) {
      // sqrt(ra)*sqrt(rb) = g*sqrt((ra/g)*(rb/g)) with g = gcd(ra, rb); the
      // cofactors are coprime and square-free, so their product is too.
      Integer g;
      mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
      const Integer r = (ra / g) * (rb / g);
      out.add_term(r, ca * cb * Rational(g));
    }
  }
  return out;
}

AlgebraicValue& AlgebraicValue::operator*=(const AlgebraicValue& other) {
  *this = *this * other;
  return *this;
}

AlgebraicValue& AlgebraicValue::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [r, c] : terms_) c *= q;
  return *this;
}

AlgebraicValue AlgebraicValue::inverse() const {
  if (terms_.empty()) throw DomainError("inverse of zero");
  if (terms_.size() != 1) throw ShapeError("inverse: value has several terms");
  const auto& [radicand, coeff] = *terms_.begin();
  // 1 / (c sqrt(r)) = sqrt(r) / (c r)
  return term(Rational(1) / (coeff * Rational(radicand)), radicand);
}

std::pair<int, Rational> AlgebraicValue::signum_and_square() const {
  if (terms_.empty()) return {0, Rational(0)};
  if (terms_.size() != 1) throw ShapeError("signum_and_square: value has several terms");
  const auto& [r, c] = *terms_.begin();
  return {sgn(c), c * c * Rational(r)};
}

int AlgebraicValue::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  mpf_class acc(0, 1024);
  for (const auto& [r, c] : terms_) {
    mpf_class root(r, 1024);
    root = sqrt(root);
    acc += mpf_class(c, 1024) * root;
  }
  return sgn(acc);
}

double AlgebraicValue::to_double() const {
  double acc = 0.0;
  for (const auto& [r, c] : terms_) acc += c.get_d() * std::sqrt(r.get_d());
  return acc;
}

std::string AlgebraicValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : terms_) {
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (r == 1) {
      out << gtbcd::to_string(mag);
    } else {
      if (mag != 1) out << gtbcd::to_string(mag) << "*";
      out << "sqrt(" << r.get_str() << ")";
    }
  }
  return out.str();
}

std::vector<std::array<Integer, 3>> AlgebraicValue::to_triples() const {
  std::vector<std::array<Integer, 3>> out;
  out.reserve(terms_.size());
  for (const auto& [r, c] : terms_) out.push_back({c.get_num(), c.get_den(), r});
  return out;
}

AlgebraicValue AlgebraicValue::from_triples(const std::vector<std::array<Integer, 3>>& triples) {
  AlgebraicValue v;
  for (const auto& t : triples) {
    if (t[1] == 0) throw ShapeError("from_triples: zero denominator");
    Rational c(t[0], t[1]);
    c.canonicalize();
    v += term(c, t[2]);
  }
  return v;
}

}  // namespace gtbcd
