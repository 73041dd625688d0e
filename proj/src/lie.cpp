#include "gtbcd/lie.hpp"

#include <algorithm>
#include <map>

namespace gtbcd {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  if (text == "D" || text == "d") return Family::D;
  throw ShapeError("unknown family '" + text + "' (expected A, B, C or D)");
}

void AlgebraLabel::validate() const {
  if (rank < 1) throw DomainError("rank must be at least 1");
  if (family == Family::D && rank < 2) throw DomainError("family D requires rank >= 2");
}

std::string AlgebraLabel::to_string() const { return std::string(1, family_char(family)) + std::to_string(rank); }

std::string GeneratorId::to_string() const {
  return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int sign_of(int x) { return (x > 0) - (x < 0); }

std::vector<int> coordinates(const AlgebraLabel& label) {
  std::vector<int> c;
  for (int a = -label.rank; a <= -1; ++a) c.push_back(a);
  if (label.family == Family::A) return c;
  if (label.family == Family::B) c.push_back(0);
  for (int a = 1; a <= label.rank; ++a) c.push_back(a);
  return c;
}

int coordinate_position(const AlgebraLabel& label, int c) {
  const int n = label.rank;
  if (c < -n || c > n) throw DomainError("coordinate out of range");
  if (c < 0) return c + n;
  if (label.family == Family::A) throw DomainError("gl coordinates are negative");
  if (c == 0) {
    if (label.family != Family::B) throw DomainError("coordinate 0 exists only for B");
    return n;
  }
  return label.family == Family::B ? n + c : n + c - 1;
}

int defining_dimension(const AlgebraLabel& label) { return static_cast<int>(coordinates(label).size()); }

namespace {

bool is_coordinate(const AlgebraLabel& label, int c) {
  const int n = label.rank;
  if (c < -n || c > n) return false;
  if (label.family == Family::A) return c < 0;
  if (c == 0) return label.family == Family::B;
  return true;
}

using Dense = std::map<std::pair<int, int>, Rational>;

Dense dense_of(const AlgebraLabel& label, GeneratorId g) {
  Dense m;
  for (const auto& [r, c, v] : defining_entries(label, g)) m[{r, c}] += v;
  return m;
}

}  // namespace

std::vector<std::tuple<int, int, int>> defining_entries(const AlgebraLabel& label, GeneratorId g) {
  if (!is_coordinate(label, g.i) || !is_coordinate(label, g.j)) {
    throw DomainError("generator " + g.to_string() + " not defined for " + label.to_string());
  }
  std::map<std::pair<int, int>, int> m;
  m[{g.i, g.j}] += 1;
  if (label.family == Family::B || label.family == Family::D) {
    m[{-g.j, -g.i}] -= 1;
  } else if (label.family == Family::C) {
    m[{-g.j, -g.i}] -= sign_of(g.i) * sign_of(g.j);
  }
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& [rc, v] : m) {
    if (v != 0) out.emplace_back(rc.first, rc.second, v);
  }
  return out;
}

bool is_generator(const AlgebraLabel& label, GeneratorId g) {
  if (!is_coordinate(label, g.i) || !is_coordinate(label, g.j)) return false;
  return !defining_entries(label, g).empty();
}

bool is_cartan(GeneratorId g) { return g.i == g.j && g.i < 0; }
bool is_raising(GeneratorId g) { return g.i < g.j; }
bool is_lowering(GeneratorId g) { return g.i > g.j; }

namespace {

GeneratorId partner(GeneratorId g) { return {-g.j, -g.i}; }

// F_g = factor * F_partner(g) for B, C, D.
int partner_factor(const AlgebraLabel& label, GeneratorId g) {
  if (label.family == Family::C) return -sign_of(g.i) * sign_of(g.j);
  return -1;
}

}  // namespace

std::vector<GeneratorId> generator_basis(const AlgebraLabel& label) {
  std::vector<GeneratorId> out;
  const auto coords = coordinates(label);
  for (int i : coords) {
    for (int j : coords) {
      GeneratorId g{i, j};
      if (!is_generator(label, g)) continue;
      if (label.family != Family::A && partner(g) < g) continue;
      out.push_back(g);
    }
  }
  return out;
}

std::vector<GeneratorId> cartan_generators(const AlgebraLabel& label) {
  std::vector<GeneratorId> out;
  for (int a = -label.rank; a <= -1; ++a) out.push_back({a, a});
  return out;
}

std::vector<GeneratorId> simple_raising(const AlgebraLabel& label) {
  std::vector<GeneratorId> out;
  for (int a = -label.rank; a <= -2; ++a) out.push_back({a, a + 1});
  switch (label.family) {
    case Family::A: break;
    case Family::B: out.push_back({-1, 0}); break;
    case Family::C: out.push_back({-1, 1}); break;
    case Family::D: out.push_back({-2, 1}); break;
  }
  return out;
}

std::vector<GeneratorId> simple_lowering(const AlgebraLabel& label) {
  std::vector<GeneratorId> out;
  for (const auto& g : simple_raising(label)) out.push_back({g.j, g.i});
  return out;
}

Expansion expand_generator(const AlgebraLabel& label, GeneratorId g) {
  if (!is_generator(label, g)) return {};
  if (label.family == Family::A || !(partner(g) < g)) return {{g, Rational(1)}};
  return {{partner(g), Rational(partner_factor(label, g))}};
}

Expansion bracket(const AlgebraLabel& label, GeneratorId a, GeneratorId b) {
  const Dense ma = dense_of(label, a);
  const Dense mb = dense_of(label, b);
  Dense prod;
  for (const auto& [rc1, v1] : ma) {
    for (const auto& [rc2, v2] : mb) {
      if (rc1.second == rc2.first) prod[{rc1.first, rc2.second}] += v1 * v2;
      if (rc2.second == rc1.first) prod[{rc2.first, rc1.second}] -= v1 * v2;
    }
  }
  Expansion out;
  Dense rebuilt;
  for (const auto& g : generator_basis(label)) {
    auto it = prod.find({g.i, g.j});
    if (it == prod.end() || it->second == 0) continue;
    const Dense mg = dense_of(label, g);
    const Rational coeff = it->second / mg.at({g.i, g.j});
    out.emplace_back(g, coeff);
    for (const auto& [rc, v] : mg) rebuilt[rc] += coeff * v;
  }
  for (const auto& [rc, v] : prod) {
    auto it = rebuilt.find(rc);
    const Rational r = it == rebuilt.end() ? Rational(0) : it->second;
    if (r != v) throw IntegrityError("bracket expansion failed for " + a.to_string() + ", " + b.to_string());
  }
  for (const auto& [rc, v] : rebuilt) {
    auto it = prod.find(rc);
    const Rational p = it == prod.end() ? Rational(0) : it->second;
    if (p != v) throw IntegrityError("bracket expansion failed for " + a.to_string() + ", " + b.to_string());
  }
  return out;
}

int weight_index(const AlgebraLabel& label, int c) {
  if (c >= 0 || c < -label.rank) throw DomainError("weight_index needs a negative coordinate");
  return c + label.rank;
}

std::vector<Rational> generator_weight(const AlgebraLabel& label, GeneratorId g) {
  std::vector<Rational> w(label.rank, Rational(0));
  auto add = [&](int c, int s) {
    if (c < 0) w[weight_index(label, c)] += s;
    else if (c > 0) w[weight_index(label, -c)] -= s;
  };
  add(g.i, 1);
  add(g.j, -1);
  return w;
}

Rational trace_form(const AlgebraLabel& label, GeneratorId a, GeneratorId b) {
  const Dense ma = dense_of(label, a);
  const Dense mb = dense_of(label, b);
  Rational tr = 0;
  for (const auto& [rc1, v1] : ma) {
    auto it = mb.find({rc1.second, rc1.first});
    if (it != mb.end()) tr += v1 * it->second;
  }
  if (label.family != Family::A) tr /= 2;
  return tr;
}

int embed_coordinate(int c) {
  if (c < 0) return c - 1;
  if (c > 0) return c + 1;
  return 0;
}

GeneratorId embed_generator(GeneratorId g) { return {embed_coordinate(g.i), embed_coordinate(g.j)}; }

}  // namespace gtbcd
