#include "gtbcd/operators.hpp"

#include <vector>

namespace gtbcd {

AlgebraicValue SparseOperator::at(std::size_t row, std::size_t col) const {
  const auto it = entries.find({row, col});
  return it == entries.end() ? AlgebraicValue() : it->second;
}

void SparseOperator::add(std::size_t row, std::size_t col, const AlgebraicValue& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries.erase(it);
  }
}

void SparseOperator::check() const {
  for (const auto& [key, value] : entries) {
    if (key.first >= dim || key.second >= dim) throw ShapeError("operator entry index out of range");
    if (value.is_zero()) throw ShapeError("operator stores an explicit zero");
  }
}

bool same_entries(const SparseOperator& a, const SparseOperator& b) { return a.dim == b.dim && a.entries == b.entries; }

namespace {
SparseOperator like(const SparseOperator& a) {
  SparseOperator r;
  r.label = a.label;
  r.hw = a.hw;
  r.gen = a.gen;
  r.dim = a.dim;
  return r;
}
}  // namespace

SparseOperator transpose(const SparseOperator& a) {
  SparseOperator r = like(a);
  r.gen = {a.gen.j, a.gen.i};
  for (const auto& [key, value] : a.entries) r.entries.emplace(SparseOperator::Key{key.second, key.first}, value);
  return r;
}

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim != b.dim) throw ShapeError("operator dimensions differ");
  std::vector<std::vector<std::pair<std::size_t, const AlgebraicValue*>>> a_by_col(a.dim);
  for (const auto& [key, value] : a.entries) a_by_col[key.second].emplace_back(key.first, &value);
  SparseOperator r = like(a);
  for (const auto& [key, value] : b.entries) {
    for (const auto& [row, av] : a_by_col[key.first]) r.add(row, key.second, *av * value);
  }
  return r;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  SparseOperator r = multiply(a, b);
  for (const auto& [key, value] : multiply(b, a).entries) r.add(key.first, key.second, -value);
  return r;
}

SparseOperator linear_combination(const std::vector<std::pair<Rational, const SparseOperator*>>& terms) {
  if (terms.empty()) throw ShapeError("empty linear combination");
  SparseOperator r = like(*terms.front().second);
  for (const auto& [c, op] : terms) {
    if (op->dim != r.dim) throw ShapeError("operator dimensions differ");
    if (c == 0) continue;
    for (const auto& [key, value] : op->entries) r.add(key.first, key.second, value * AlgebraicValue(c));
  }
  return r;
}

SparseOperator scaled(const SparseOperator& a, const AlgebraicValue& c) {
  SparseOperator r = like(a);
  if (c.is_zero()) return r;
  for (const auto& [key, value] : a.entries) r.entries.emplace(key, value * c);
  return r;
}

SparseOperator identity_operator(const AlgebraLabel& label, const Weight& hw, std::size_t dim) {
  SparseOperator r;
  r.label = label;
  r.hw = hw;
  r.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) r.entries.emplace(SparseOperator::Key{i, i}, AlgebraicValue(1));
  return r;
}

namespace {
nlohmann::json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}
Integer integer_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ShapeError("malformed integer in JSON");
    return z;
  }
  throw ShapeError("expected an integer in JSON");
}
}  // namespace

nlohmann::json value_to_json(const AlgebraicValue& v) {
  auto a = nlohmann::json::array();
  for (const auto& t : v.to_triples()) a.push_back({integer_json(t[0]), integer_json(t[1]), integer_json(t[2])});
  return a;
}

AlgebraicValue value_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ShapeError("an exact value is a list of triples");
  std::vector<std::array<Integer, 3>> triples;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw ShapeError("an exact value term is a [num, den, radicand] triple");
    triples.push_back({integer_from(t[0]), integer_from(t[1]), integer_from(t[2])});
  }
  return AlgebraicValue::from_triples(triples);
}

nlohmann::json operator_to_json(const SparseOperator& a) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(a.label.family));
  j["rank"] = a.label.rank;
  auto hw = nlohmann::json::array();
  for (const auto& x : a.hw) hw.push_back(to_string(x));
  j["hw"] = hw;
  j["gen"] = {a.gen.i, a.gen.j};
  j["dim"] = a.dim;
  auto entries = nlohmann::json::array();
  for (const auto& [key, value] : a.entries) entries.push_back({key.first, key.second, value_to_json(value)});
  j["entries"] = entries;
  return j;
}

SparseOperator operator_from_json(const nlohmann::json& j) {
  try {
    SparseOperator a;
    a.label = {parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    a.label.validate();
    for (const auto& x : j.at("hw")) a.hw.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    if (static_cast<int>(a.hw.size()) != a.label.rank) throw ShapeError("hw length differs from the rank");
    a.gen = {j.at("gen").at(0).get<int>(), j.at("gen").at(1).get<int>()};
    a.dim = j.at("dim").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw ShapeError("operator entry must be [row, col, value]");
      const auto row = e[0].get<std::size_t>();
      const auto col = e[1].get<std::size_t>();
      if (a.entries.count({row, col})) throw ShapeError("duplicate operator entry");
      a.entries.emplace(SparseOperator::Key{row, col}, value_from_json(e[2]));
    }
    a.check();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed operator JSON: ") + e.what());
  }
}

}  // namespace gtbcd
