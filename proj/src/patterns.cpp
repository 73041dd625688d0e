#include "gtbcd/patterns.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gtbcd {

namespace {

std::string row_string(const Row& r) {
  std::string s = "[";
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) s += ",";
    s += to_string(r[k]);
  }
  return s + "]";
}

bool is_half_class(const Row& r) { return !r.empty() && r.front().get_den() == 2; }

bool in_class(const Rational& x, bool half) { return half ? x.get_den() == 2 : x.get_den() == 1; }

// Values lo <= x <= hi of the given class (integers or half-odd integers), ascending.
std::vector<Rational> values_between(const Rational& lo, const Rational& hi, bool half) {
  std::vector<Rational> out;
  if (lo > hi) return out;
  Integer start;
  Rational shift = half ? Rational(1, 2) : Rational(0);
  Rational base = lo - shift;
  mpz_cdiv_q(start.get_mpz_t(), base.get_num_mpz_t(), base.get_den_mpz_t());
  for (Rational x = Rational(start) + shift; x <= hi; x += 1) out.push_back(x);
  return out;
}

Rational sum(const Row& r) {
  Rational s = 0;
  for (const auto& x : r) s += x;
  return s;
}

// Cartesian product of per-position ranges subject to a chained constraint
// supplied by `range(position, prefix)`.
void fill_rows(std::size_t length, const std::function<std::vector<Rational>(std::size_t, const Row&)>& range,
               std::vector<Row>& out) {
  Row current;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == length) {
      out.push_back(current);
      return;
    }
    for (const auto& v : range(pos, current)) {
      current.push_back(v);
      rec(pos + 1);
      current.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::string Pattern::to_string() const {
  std::ostringstream out;
  out << label.to_string() << "{";
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (l) out << " | ";
    out << row_string(levels[l].row);
    if (!levels[l].primed.empty() || label.family == Family::B || label.family == Family::C) {
      out << " " << row_string(levels[l].primed) << "'";
    }
    if (label.family == Family::B) out << " s" << levels[l].sigma;
  }
  out << "}";
  return out.str();
}

std::string GlPattern::to_string() const {
  std::string s = "gl{";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) s += " | ";
    s += row_string(rows[k]);
  }
  return s + "}";
}

std::size_t primed_length(Family family, int k) {
  switch (family) {
    case Family::A: return 0;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(k);
    case Family::D: return k >= 2 ? static_cast<std::size_t>(k - 1) : 0;
  }
  return 0;
}

std::vector<LevelChoice> level_choices(Family family, const Row& row) {
  const std::size_t k = row.size();
  const bool half = is_half_class(row);
  std::vector<LevelChoice> out;
  if (family == Family::A) {
    if (k <= 1) return out;
    std::vector<Row> nexts;
    fill_rows(k - 1, [&](std::size_t i, const Row&) { return values_between(row[i + 1], row[i], false); }, nexts);
    for (auto& r : nexts) out.push_back({{}, 0, std::move(r)});
    return out;
  }
  if (family == Family::D) {
    if (k <= 1) return out;
    std::vector<Row> primes;
    fill_rows(k - 1, [&](std::size_t i, const Row&) {
      const Rational lo = (i + 2 == k) ? Rational(abs(row[k - 1])) : row[i + 1];
      return values_between(lo, row[i], half);
    }, primes);
    for (const auto& p : primes) {
      std::vector<Row> nexts;
      fill_rows(k - 1, [&](std::size_t i, const Row&) {
        const Rational lo = (i + 2 == k) ? Rational(-p[i]) : p[i + 1];
        return values_between(lo, p[i], half);
      }, nexts);
      for (auto& r : nexts) out.push_back({p, 0, std::move(r)});
    }
    return out;
  }
  // B and C: primed row of length k interlacing [row, 0].
  std::vector<Row> primes;
  fill_rows(k, [&](std::size_t i, const Row&) {
    const Rational lo = (i + 1 == k) ? Rational(0) : row[i + 1];
    return values_between(lo, row[i], half);
  }, primes);
  for (const auto& p : primes) {
    std::vector<Row> nexts;
    fill_rows(k - 1, [&](std::size_t i, const Row&) { return values_between(p[i + 1], p[i], half); }, nexts);
    for (auto& r : nexts) {
      if (family == Family::B && p.back() != 0) {
        out.push_back({p, 0, r});
        out.push_back({p, 1, std::move(r)});
      } else {
        out.push_back({p, 0, std::move(r)});
      }
    }
  }
  return out;
}

Rational level_weight(Family family, const Row& row, const Row& primed, int sigma, const Row& next_row) {
  switch (family) {
    case Family::A: return sum(row) - sum(next_row);
    case Family::B: return 2 * sum(primed) - sum(row) - sum(next_row) - sigma;
    case Family::C: return 2 * sum(primed) - sum(row) - sum(next_row);
    case Family::D: {
      if (row.size() == 1) return row[0];
      const Rational corner = std::min(row.back(), next_row.back());
      return 2 * (sum(primed) + corner) - sum(row) - sum(next_row);
    }
  }
  return 0;
}

void check_shape(const Pattern& p) {
  p.label.validate();
  const int n = p.label.rank;
  if (static_cast<int>(p.levels.size()) != n) throw ShapeError("pattern has " + std::to_string(p.levels.size()) + " levels, expected " + std::to_string(n));
  for (int k = n; k >= 1; --k) {
    const auto& lv = p.level(k);
    if (lv.row.size() != static_cast<std::size_t>(k)) throw ShapeError("level " + std::to_string(k) + " row has wrong length");
    if (lv.primed.size() != primed_length(p.label.family, k)) throw ShapeError("level " + std::to_string(k) + " primed row has wrong length");
    if (lv.sigma != 0 && (p.label.family != Family::B || lv.sigma != 1)) throw ShapeError("sigma must be 0 or 1 and only occurs for B");
  }
}

std::vector<std::string> validate(const Pattern& p) {
  check_shape(p);
  std::vector<std::string> bad;
  const Family f = p.label.family;
  const int n = p.label.rank;
  if (!is_dominant(p.label, p.highest_weight())) bad.push_back("dominance: top row is not a dominant weight");
  const bool half = is_half_class(p.highest_weight());
  auto check_class = [&](const Row& r, const std::string& what) {
    for (const auto& x : r) {
      if (!in_class(x, half)) {
        bad.push_back("integrality: " + what + " entry " + to_string(x) + " not in the class of the highest weight");
        return;
      }
    }
  };
  for (int k = n; k >= 1; --k) {
    const auto& lv = p.level(k);
    const std::string at = " at level " + std::to_string(k);
    check_class(lv.row, "row" + at);
    check_class(lv.primed, "primed row" + at);
    const Row* next = k > 1 ? &p.level(k - 1).row : nullptr;
    const Row empty;
    const Row& nx = next ? *next : empty;
    switch (f) {
      case Family::A:
        for (int i = 0; i + 1 < k; ++i) {
          if (!(lv.row[i] >= nx[i] && nx[i] >= lv.row[i + 1])) bad.push_back("interlacing" + at);
        }
        break;
      case Family::B:
      case Family::C:
        for (int i = 0; i < k; ++i) {
          const Rational lo = i + 1 < k ? lv.row[i + 1] : Rational(0);
          if (!(lv.row[i] >= lv.primed[i] && lv.primed[i] >= lo)) bad.push_back("interlacing: primed row" + at);
        }
        for (int i = 0; i + 1 < k; ++i) {
          if (!(lv.primed[i] >= nx[i] && nx[i] >= lv.primed[i + 1])) bad.push_back("interlacing: next row" + at);
        }
        if (f == Family::B && lv.sigma == 1 && lv.primed.back() == 0) bad.push_back("sigma constraint" + at + ": sigma must vanish when m'_{-1} = 0");
        break;
      case Family::D:
        if (k == 1) break;
        for (int i = 0; i + 1 < k; ++i) {
          const Rational lo = i + 2 == k ? Rational(abs(lv.row[k - 1])) : lv.row[i + 1];
          if (!(lv.row[i] >= lv.primed[i] && lv.primed[i] >= lo)) bad.push_back("interlacing: primed row" + at);
        }
        for (int i = 0; i + 1 < k; ++i) {
          const Rational lo = i + 2 == k ? Rational(-lv.primed[i]) : lv.primed[i + 1];
          const Rational hi = lv.primed[i];
          if (!(hi >= nx[i] && nx[i] >= lo)) bad.push_back("interlacing: next row" + at);
        }
        break;
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

std::vector<Rational> pattern_key(const Pattern& p) {
  std::vector<Rational> key;
  for (const auto& lv : p.levels) {
    key.insert(key.end(), lv.row.begin(), lv.row.end());
    key.insert(key.end(), lv.primed.begin(), lv.primed.end());
    if (p.label.family == Family::B) key.emplace_back(1 - lv.sigma);  // sigma = 0 first
  }
  return key;
}

bool pattern_before(const Pattern& a, const Pattern& b) { return pattern_key(a) > pattern_key(b); }

std::vector<Pattern> enumerate_patterns(const AlgebraLabel& label, const Weight& lambda) {
  validate_dominant(label, lambda);
  const int n = label.rank;
  std::vector<Pattern> out;
  Pattern current;
  current.label = label;
  current.levels.resize(n);
  std::function<void(int, const Row&)> rec = [&](int k, const Row& row) {
    auto& lv = current.level(k);
    lv.row = row;
    lv.primed.clear();
    lv.sigma = 0;
    if (k == 1 && (label.family == Family::A || label.family == Family::D)) {
      out.push_back(current);
      return;
    }
    for (const auto& choice : level_choices(label.family, row)) {
      auto& here = current.level(k);
      here.primed = choice.primed;
      here.sigma = choice.sigma;
      if (k == 1) {
        out.push_back(current);
      } else {
        rec(k - 1, choice.next_row);
      }
    }
  };
  rec(n, lambda);
  std::sort(out.begin(), out.end(), pattern_before);
  return out;
}

Weight pattern_weight(const Pattern& p) {
  const auto bad = validate(p);
  if (!bad.empty()) throw DomainError("weight of an invalid pattern: " + bad.front());
  const int n = p.label.rank;
  Weight w(n);
  for (int k = n; k >= 1; --k) {
    const auto& lv = p.level(k);
    const Row empty;
    const Row& next = k > 1 ? p.level(k - 1).row : empty;
    w[k - 1] = level_weight(p.label.family, lv.row, lv.primed, lv.sigma, next);
  }
  return w;
}

Pattern max_pattern(const AlgebraLabel& label, const Weight& lambda) {
  validate_dominant(label, lambda);
  const int n = label.rank;
  Pattern p;
  p.label = label;
  p.levels.resize(n);
  Row row = lambda;
  for (int k = n; k >= 1; --k) {
    auto& lv = p.level(k);
    lv.row = row;
    const std::size_t plen = primed_length(label.family, k);
    lv.primed.assign(row.begin(), row.begin() + static_cast<long>(plen));
    lv.sigma = 0;
    row.assign(row.begin(), row.end() - 1);
  }
  return p;
}

Pattern sub_pattern(const Pattern& p, int k) {
  if (k < 1 || k > p.label.rank) throw ShapeError("sub_pattern level out of range");
  if (p.label.family == Family::D && k < 2) throw ShapeError("D sub-patterns need rank >= 2");
  Pattern s;
  s.label = {p.label.family, k};
  s.levels.assign(p.levels.end() - k, p.levels.end());
  return s;
}

GlPattern gl_pattern_of_block(const Pattern& p) {
  if (p.label.family != Family::B && p.label.family != Family::C) throw ShapeError("only B and C blocks have a gl_3 image");
  if (p.label.rank < 2) throw ShapeError("gl_pattern_of_block needs rank >= 2");
  const auto& l2 = p.level(2);
  const auto& l1 = p.level(1);
  return GlPattern{{Row{l2.row[0], l2.row[1], Rational(0)}, l2.primed, l1.row}};
}

std::pair<Integer, Integer> o4_pq(const Rational& m22, const Rational& m12, const Rational& mp22, const Rational& m21) {
  Rational p;
  Rational q;
  if (m21 - m12 > 0) {
    p = m22 - mp22;
    q = p + m21 - m12;
  } else {
    q = m22 - mp22;
    p = q - m21 + m12;
  }
  if (p.get_den() != 1 || q.get_den() != 1 || p < 0 || q < 0) throw DomainError("o4_pq: not a valid o4 block");
  return {p.get_num(), q.get_num()};
}

std::pair<Integer, Integer> o4_pq(const Pattern& p) {
  if (p.label.family != Family::D) throw ShapeError("o4_pq needs a D pattern");
  const auto& l2 = p.level(2);
  return o4_pq(l2.row[0], l2.row[1], l2.primed[0], p.level(1).row[0]);
}

Pattern to_pattern(const GlPattern& g) {
  Pattern p;
  p.label = {Family::A, static_cast<int>(g.rows.size())};
  for (const auto& r : g.rows) p.levels.push_back({r, {}, 0});
  return p;
}

GlPattern to_gl_pattern(const Pattern& p) {
  if (p.label.family != Family::A) throw ShapeError("to_gl_pattern needs a gl pattern");
  GlPattern g;
  for (const auto& lv : p.levels) g.rows.push_back(lv.row);
  return g;
}

bool gl_valid(const GlPattern& g) {
  for (std::size_t k = 0; k + 1 < g.rows.size(); ++k) {
    const auto& up = g.rows[k];
    const auto& lo = g.rows[k + 1];
    if (lo.size() + 1 != up.size()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(up[i] >= lo[i] && lo[i] >= up[i + 1])) return false;
    }
  }
  return true;
}

std::vector<GlPattern> enumerate_gl_patterns(const Row& top) {
  std::vector<GlPattern> out;
  AlgebraLabel label{Family::A, static_cast<int>(top.size())};
  for (const auto& p : enumerate_patterns(label, top)) out.push_back(to_gl_pattern(p));
  return out;
}

nlohmann::json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ShapeError("expected a rational encoded as \"a/b\"");
}

namespace {
nlohmann::json row_json(const Row& r) {
  auto a = nlohmann::json::array();
  for (const auto& x : r) a.push_back(rational_to_json(x));
  return a;
}
Row row_from(const nlohmann::json& j) {
  Row r;
  for (const auto& x : j) r.push_back(rational_from_json(x));
  return r;
}
}  // namespace

nlohmann::json pattern_to_json(const Pattern& p) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(p.label.family));
  j["rank"] = p.label.rank;
  j["hw"] = row_json(p.highest_weight());
  auto rows = nlohmann::json::array();
  auto sigmas = nlohmann::json::array();
  const int n = p.label.rank;
  for (int k = n; k >= 1; --k) {
    const auto& lv = p.level(k);
    rows.push_back(row_json(lv.row));
    if (primed_length(p.label.family, k) > 0) rows.push_back(row_json(lv.primed));
    if (p.label.family == Family::B) sigmas.push_back(lv.sigma);
  }
  j["rows"] = rows;
  j["sigmas"] = sigmas;
  return j;
}

Pattern pattern_from_json(const nlohmann::json& j) {
  try {
    Pattern p;
    p.label = {parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    p.label.validate();
    const int n = p.label.rank;
    const auto& rows = j.at("rows");
    std::size_t pos = 0;
    p.levels.resize(n);
    for (int k = n; k >= 1; --k) {
      auto& lv = p.level(k);
      lv.row = row_from(rows.at(pos++));
      if (primed_length(p.label.family, k) > 0) lv.primed = row_from(rows.at(pos++));
    }
    if (pos != rows.size()) throw ShapeError("pattern JSON has extra rows");
    if (p.label.family == Family::B) {
      const auto& s = j.at("sigmas");
      if (s.size() != static_cast<std::size_t>(n)) throw ShapeError("pattern JSON sigma count mismatch");
      for (int k = n; k >= 1; --k) p.level(k).sigma = s.at(n - k).get<int>();
    }
    if (j.contains("hw") && row_from(j.at("hw")) != p.highest_weight()) throw ShapeError("pattern JSON hw differs from the top row");
    check_shape(p);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed pattern JSON: ") + e.what());
  }
}

}  // namespace gtbcd
