#pragma once
// Gelfand-Tsetlin type patterns for gl_n and for the chains
//   o_{2n+1} > o_{2n-1} > ... > o_3,  sp_{2n} > ... > sp_2,  o_{2n} > ... > o_2.
//
// A pattern has one level per k = n..1.  Level k holds the unprimed row
// [m]_k (k entries, indexed -k..-1), a primed row [m']_k (k entries for B and
// C, k-1 for D, none for gl and for level 1 of D) and, for B, a bit sigma_k.
// The unprimed row of level k-1 is the highest weight of the subalgebra g_{k-1}
// (acting on the coordinates other than +-1..+-(n-k+1)); the primed row and
// sigma label the multiplicity of that g_{k-1}-module.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtbcd/lie.hpp"
#include "gtbcd/numerics.hpp"
#include "gtbcd/roots.hpp"

namespace gtbcd {

using Row = std::vector<Rational>;

struct PatternLevel {
  Row row;
  Row primed;
  int sigma = 0;
  friend bool operator==(const PatternLevel& a, const PatternLevel& b) {
    return a.row == b.row && a.primed == b.primed && a.sigma == b.sigma;
  }
};

struct Pattern {
  AlgebraLabel label;
  std::vector<PatternLevel> levels;  // levels[0] is level n, levels[n-1] is level 1

  const PatternLevel& level(int k) const { return levels.at(label.rank - k); }
  PatternLevel& level(int k) { return levels.at(label.rank - k); }
  const Row& highest_weight() const { return levels.front().row; }
  friend bool operator==(const Pattern& a, const Pattern& b) { return a.label == b.label && a.levels == b.levels; }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }
  std::string to_string() const;
};

/// A gl_N Gelfand-Tsetlin pattern, rows[0] the top row (N entries).
struct GlPattern {
  std::vector<Row> rows;
  friend bool operator==(const GlPattern& a, const GlPattern& b) { return a.rows == b.rows; }
  friend bool operator<(const GlPattern& a, const GlPattern& b) { return a.rows < b.rows; }
  std::string to_string() const;
};

/// One admissible choice of data below an unprimed row at a given level.
struct LevelChoice {
  Row primed;
  int sigma = 0;
  Row next_row;
};

/// All choices (primed row, sigma, next unprimed row) below the unprimed row
/// of a level, for the given family.  Empty at the bottom level of gl and D.
std::vector<LevelChoice> level_choices(Family family, const Row& row);
/// Weight component carried by a level (depends only on its rows and the
/// unprimed row below it).
Rational level_weight(Family family, const Row& row, const Row& primed, int sigma, const Row& next_row);

/// Expected row lengths of a level.
std::size_t primed_length(Family family, int k);

/// Lists violated constraints ("interlacing ...", "sigma constraint ...",
/// "integrality ...", "dominance ..."); empty when valid.  Throws ShapeError
/// if the shape does not match the label.
std::vector<std::string> validate(const Pattern& p);
void check_shape(const Pattern& p);

/// All valid patterns with top row lambda, in pattern order.
std::vector<Pattern> enumerate_patterns(const AlgebraLabel& label, const Weight& lambda);
/// Weight [Delta_{-n}, ..., Delta_{-1}]: level k contributes the component of
/// coordinate -(n-k+1), the one g_k has and g_{k-1} lacks.  DomainError for
/// invalid patterns.
Weight pattern_weight(const Pattern& p);

/// The pattern whose rows repeat the row above as far as possible (the
/// highest vector).
Pattern max_pattern(const AlgebraLabel& label, const Weight& lambda);
/// The bottom k levels, as a pattern of the rank-k algebra.
Pattern sub_pattern(const Pattern& p, int k);
/// The gl_3 pattern of the rank-2 block of a B or C pattern:
/// [m_{-2,2}, m_{-1,2}, 0] / [m'_{-2,2}, m'_{-1,2}] / [m_{-2,1}].
GlPattern gl_pattern_of_block(const Pattern& p);
/// Numbers (p, q) of the o_4 block of a D pattern.
std::pair<Integer, Integer> o4_pq(const Pattern& p);
std::pair<Integer, Integer> o4_pq(const Rational& m_m2_2, const Rational& m_m1_2, const Rational& mp_m2_2,
                                  const Rational& m_m2_1);

/// Pattern order: descending lexicographic order of the concatenation of all
/// rows top-down (then sigma = 0 before sigma = 1 at each level), so the
/// highest vector comes first.
std::vector<Rational> pattern_key(const Pattern& p);
bool pattern_before(const Pattern& a, const Pattern& b);

/// gl patterns as patterns of family A and back.
Pattern to_pattern(const GlPattern& g);
GlPattern to_gl_pattern(const Pattern& p);
bool gl_valid(const GlPattern& g);
std::vector<GlPattern> enumerate_gl_patterns(const Row& top);

nlohmann::json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace gtbcd
