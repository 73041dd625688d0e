#include "gtbcd/wigner.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

#include "gtbcd/operators.hpp"

namespace gtbcd {

namespace {

// Column-indexed view of a sparse rational matrix.
using Columns = std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>>;

Columns by_column(const RationalOperator& m) {
  Columns c;
  for (const auto& [key, x] : m) c[key.second].emplace_back(key.first, x);
  return c;
}

SparseVector apply_columns(const Columns& m, const SparseVector& v) {
  SparseVector out;
  for (const auto& [j, a] : v) {
    const auto col = m.find(j);
    if (col == m.end()) continue;
    for (const auto& [i, x] : col->second) {
      Rational& slot = out[i];
      slot += a * x;
      if (slot == 0) out.erase(i);
    }
  }
  return out;
}

Weight add(Weight a, const Weight& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::size_t std_position(const AlgebraLabel& label, int s) {
  return static_cast<std::size_t>(coordinate_position(label, s));
}

// Elimination row: sum_k coef_k Phi_k = rhs.
struct Equation {
  std::map<std::size_t, Rational> coef;
  SparseVector rhs;
};

}  // namespace

AlgebraicValue WignerTable::at(std::size_t bar, int i, std::size_t ket) const {
  const auto it = entries.find({bar, i, ket});
  return it == entries.end() ? AlgebraicValue() : it->second;
}

Weight standard_weight(const AlgebraLabel& label, int s) {
  label.validate();
  const auto coords = coordinates(label);
  if (std::find(coords.begin(), coords.end(), s) == coords.end()) {
    throw DomainError("shift " + std::to_string(s) + " is not a coordinate of " + label.to_string());
  }
  Weight w(label.rank, Rational(0));
  if (s < 0) w[weight_index(label, s)] = 1;
  if (s > 0) w[weight_index(label, -s)] = -1;
  return w;
}

RationalOperator tensor_unnormalized_op(const AlgebraLabel& label, const Representation& ket, GeneratorId g) {
  RationalOperator out;
  const std::size_t d = ket.dimension();
  for (const auto& [r, c, value] : defining_entries(label, g)) {
    const std::size_t pr = std_position(label, r);
    const std::size_t pc = std_position(label, c);
    for (std::size_t j = 0; j < d; ++j) out[{pr * d + j, pc * d + j}] += value;
  }
  const std::size_t positions = coordinates(label).size();
  for (const auto& [key, x] : ket.unnormalized_op(g)) {
    for (std::size_t a = 0; a < positions; ++a) out[{a * d + key.first, a * d + key.second}] += x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

WignerTable build_intertwiner(const AlgebraLabel& label, const Weight& lambda, int shift) {
  label.validate();
  validate_dominant(label, lambda);
  WignerTable table;
  table.label = label;
  table.lambda = lambda;
  table.shift = shift;
  table.lambda_bar = add(lambda, standard_weight(label, shift));
  const auto constituents = tensor_with_standard(label, lambda);
  if (std::find(constituents.begin(), constituents.end(), table.lambda_bar) == constituents.end()) {
    throw DomainError(weight_to_string(table.lambda_bar) + " is not a constituent of std x " +
                      weight_to_string(lambda));
  }
  const auto ket = Representation::get(label, lambda);
  const auto bar = Representation::get(label, table.lambda_bar);
  const auto coords = coordinates(label);
  const std::size_t d = ket->dimension();
  const auto std_weights = standard_weights(label);

  // Highest vector of weight lambda_bar in std (x) V^lambda.
  std::vector<std::size_t> top_basis;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      if (add(std_weights[a], ket->weights()[i]) == table.lambda_bar) top_basis.push_back(a * d + i);
    }
  }
  std::map<std::size_t, std::vector<Rational>> rows;
  for (GeneratorId e : simple_raising(label)) {
    const Columns te = by_column(tensor_unnormalized_op(label, *ket, e));
    for (std::size_t col = 0; col < top_basis.size(); ++col) {
      for (const auto& [row, x] : apply_columns(te, SparseVector{{top_basis[col], Rational(1)}})) {
        auto& r = rows[row];
        r.resize(top_basis.size());
        r[col] += x;
      }
    }
  }
  DenseMatrix system;
  for (auto& [row, r] : rows) system.push_back(r);
  const auto kernel = nullspace(system, top_basis.size());
  if (kernel.size() != 1) {
    throw IntegrityError("expected a unique highest vector of weight " + weight_to_string(table.lambda_bar) +
                         ", found " + std::to_string(kernel.size()));
  }
  std::vector<SparseVector> phi(bar->dimension());
  if (bar->weights().front() != table.lambda_bar) throw IntegrityError("first pattern is not the highest vector");
  for (std::size_t col = 0; col < top_basis.size(); ++col) {
    if (kernel[0][col] != 0) phi[0][top_basis[col]] = kernel[0][col];
  }

  // Propagate down by the simple lowering operators, one weight at a time.
  std::map<Weight, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < bar->dimension(); ++j) groups[bar->weights()[j]].push_back(j);
  std::vector<Weight> order;
  for (const auto& [w, js] : groups) order.push_back(w);
  const Weight r = rho(label);
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return inner(a, r) > inner(b, r); });
  const auto lowering = simple_lowering(label);
  std::vector<Columns> bar_ops;
  std::vector<Columns> tensor_ops;
  for (GeneratorId f : lowering) {
    bar_ops.push_back(by_column(bar->unnormalized_op(f)));
    tensor_ops.push_back(by_column(tensor_unnormalized_op(label, *ket, f)));
  }
  for (const Weight& mu : order) {
    if (mu == table.lambda_bar) continue;
    const auto& targets = groups.at(mu);
    std::vector<Equation> equations;
    for (std::size_t s = 0; s < lowering.size(); ++s) {
      const Weight source = add(mu, [&] {
        Weight w = generator_weight(label, lowering[s]);
        for (auto& x : w) x = -x;
        return w;
      }());
      const auto src = groups.find(source);
      if (src == groups.end()) continue;
      for (std::size_t j : src->second) {
        Equation eq;
        const auto col = bar_ops[s].find(j);
        if (col != bar_ops[s].end()) {
          for (const auto& [k, y] : col->second) eq.coef[k] = y;
        }
        eq.rhs = apply_columns(tensor_ops[s], phi[j]);
        if (!eq.coef.empty() || !eq.rhs.empty()) equations.push_back(std::move(eq));
      }
    }
    std::vector<bool> used(equations.size(), false);
    for (std::size_t k : targets) {
      std::size_t pivot = equations.size();
      for (std::size_t e = 0; e < equations.size(); ++e) {
        if (!used[e] && equations[e].coef.count(k)) {
          pivot = e;
          break;
        }
      }
      if (pivot == equations.size()) throw IntegrityError("basis vector not reached by simple lowering operators");
      used[pivot] = true;
      Equation& p = equations[pivot];
      const Rational c = p.coef.at(k);
      for (auto& [key, v] : p.coef) v /= c;
      p.rhs = scaled(p.rhs, Rational(1) / c);
      for (std::size_t e = 0; e < equations.size(); ++e) {
        if (e == pivot) continue;
        const auto hit = equations[e].coef.find(k);
        if (hit == equations[e].coef.end()) continue;
        const Rational factor = hit->second;
        for (const auto& [key, v] : p.coef) {
          Rational& slot = equations[e].coef[key];
          slot -= factor * v;
          if (slot == 0) equations[e].coef.erase(key);
        }
        axpy(equations[e].rhs, -factor, p.rhs);
      }
    }
    for (std::size_t e = 0; e < equations.size(); ++e) {
      if (used[e]) {
        phi[equations[e].coef.begin()->first] = equations[e].rhs;
      } else if (!equations[e].coef.empty() || !equations[e].rhs.empty()) {
        throw IntegrityError("inconsistent intertwiner equations at weight " + weight_to_string(mu));
      }
    }
  }

  // Normalize: coefficient of e_shift (x) (m)_max in Phi((m_bar)_max) is 1.
  const std::size_t lead = std_position(label, shift) * d;
  const auto lead_it = phi[0].find(lead);
  if (lead_it == phi[0].end()) throw IntegrityError("leading coefficient of the intertwiner vanishes");
  const AlgebraicValue scale =
      AlgebraicValue::sqrt_of(bar->norms()[0] / ket->norms()[0]) * AlgebraicValue(Rational(1) / lead_it->second);
  for (std::size_t j = 0; j < phi.size(); ++j) {
    for (const auto& [idx, x] : phi[j]) {
      const std::size_t a = idx / d;
      const std::size_t i = idx % d;
      AlgebraicValue v = scale * AlgebraicValue(x) * AlgebraicValue::sqrt_of(ket->norms()[i] / bar->norms()[j]);
      table.entries.emplace(WignerTable::Key{j, coords[a], i}, std::move(v));
    }
  }
  return table;
}

std::shared_ptr<const WignerTable> intertwiner(const AlgebraLabel& label, const Weight& lambda, int shift) {
  static std::mutex mutex;
  static std::map<std::tuple<AlgebraLabel, Weight, int>, std::shared_ptr<const WignerTable>> cache;
  const auto key = std::make_tuple(label, lambda, shift);
  {
    std::lock_guard<std::mutex> lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WignerTable>(build_intertwiner(label, lambda, shift));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(table)).first->second;
}

AlgebraicValue fundamental_wigner(const WignerTable& table, const Pattern& bar, int i, const Pattern& ket) {
  const auto bar_rep = Representation::get(table.label, table.lambda_bar);
  const auto ket_rep = Representation::get(table.label, table.lambda);
  return table.at(bar_rep->index_of(bar), i, ket_rep->index_of(ket));
}

int restrict_coordinate(int c) {
  if (c == 0) return 0;
  if (c == 1 || c == -1) throw DomainError("coordinate +-1 does not belong to the subalgebra");
  return c < 0 ? c + 1 : c - 1;
}

AlgebraicValue sub_wigner(const Pattern& bar, int i, const Pattern& ket) {
  const int n = ket.label.rank;
  if (bar.label != ket.label) throw ShapeError("patterns of different algebras");
  if (i == 1 || i == -1 || n == 1) {
    if (n == 1) return AlgebraicValue(1);
    return sub_pattern(bar, n - 1) == sub_pattern(ket, n - 1) ? AlgebraicValue(1) : AlgebraicValue();
  }
  const Pattern bar_sub = sub_pattern(bar, n - 1);
  const Pattern ket_sub = sub_pattern(ket, n - 1);
  const AlgebraLabel sub{ket.label.family, n - 1};
  const int j = restrict_coordinate(i);
  if (sub.family == Family::D && sub.rank == 1) {
    // o_2: one-dimensional modules labelled by their weight.
    const Rational step = j < 0 ? Rational(1) : Rational(-1);
    return bar_sub.highest_weight()[0] == ket_sub.highest_weight()[0] + step ? AlgebraicValue(1) : AlgebraicValue();
  }
  Weight delta = bar_sub.highest_weight();
  for (std::size_t k = 0; k < delta.size(); ++k) delta[k] -= ket_sub.highest_weight()[k];
  for (int s : coordinates(sub)) {
    if (standard_weight(sub, s) != delta) continue;
    const auto constituents = tensor_with_standard(sub, ket_sub.highest_weight());
    if (std::find(constituents.begin(), constituents.end(), bar_sub.highest_weight()) == constituents.end()) break;
    return fundamental_wigner(*intertwiner(sub, ket_sub.highest_weight(), s), bar_sub, j, ket_sub);
  }
  return AlgebraicValue();
}

AlgebraicValue reduced_wigner(const AlgebraLabel& label, const Weight& lambda, int shift, const Pattern& bar, int i,
                              const Pattern& ket) {
  const AlgebraicValue full = fundamental_wigner(*intertwiner(label, lambda, shift), bar, i, ket);
  const AlgebraicValue sub = sub_wigner(bar, i, ket);
  if (sub.is_zero()) throw DomainError("the subalgebra coefficient vanishes");
  return full * sub.inverse();
}

std::size_t equivariance_defects(const WignerTable& table) {
  const auto bar = Representation::get(table.label, table.lambda_bar);
  const auto ket = Representation::get(table.label, table.lambda);
  // Phi columns: bar index -> ((coordinate, ket index) -> value)
  using Column = std::map<std::pair<int, std::size_t>, AlgebraicValue>;
  std::vector<Column> phi(bar->dimension());
  for (const auto& [key, v] : table.entries) phi[std::get<0>(key)][{std::get<1>(key), std::get<2>(key)}] = v;
  auto accumulate = [](Column& c, const std::pair<int, std::size_t>& k, const AlgebraicValue& v) {
    AlgebraicValue& slot = c[k];
    slot += v;
    if (slot.is_zero()) c.erase(k);
  };
  std::size_t defects = 0;
  for (GeneratorId g : generator_basis(table.label)) {
    const SparseOperator pb = bar->op(g);
    const SparseOperator pk = ket->op(g);
    const auto std_entries = defining_entries(table.label, g);
    std::vector<Column> lhs(bar->dimension());
    std::vector<Column> rhs(bar->dimension());
    for (const auto& [key, y] : pb.entries) {
      for (const auto& [k, v] : phi[key.first]) accumulate(lhs[key.second], k, y * v);
    }
    std::map<std::size_t, std::vector<std::pair<std::size_t, AlgebraicValue>>> ket_cols;
    for (const auto& [key, x] : pk.entries) ket_cols[key.second].emplace_back(key.first, x);
    for (std::size_t j = 0; j < phi.size(); ++j) {
      for (const auto& [k, v] : phi[j]) {
        for (const auto& [r, c, value] : std_entries) {
          if (c == k.first) accumulate(rhs[j], {r, k.second}, AlgebraicValue(Rational(value)) * v);
        }
        const auto col = ket_cols.find(k.second);
        if (col == ket_cols.end()) continue;
        for (const auto& [i, x] : col->second) accumulate(rhs[j], {k.first, i}, x * v);
      }
    }
    for (std::size_t j = 0; j < phi.size(); ++j) {
      for (const auto& [k, v] : lhs[j]) {
        const auto it = rhs[j].find(k);
        if (it == rhs[j].end() || it->second != v) ++defects;
      }
      for (const auto& [k, v] : rhs[j]) {
        if (!lhs[j].count(k)) ++defects;
      }
    }
  }
  return defects;
}

std::size_t selection_rule_defects(const WignerTable& table) {
  const auto bar = Representation::get(table.label, table.lambda_bar);
  const auto ket = Representation::get(table.label, table.lambda);
  std::size_t defects = 0;
  for (const auto& [key, v] : table.entries) {
    const auto& [j, i, k] = key;
    if (v.is_zero()) continue;
    if (bar->weights()[j] != add(standard_weight(table.label, i), ket->weights()[k])) ++defects;
  }
  return defects;
}

nlohmann::json wigner_to_json(const WignerTable& table) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(table.label.family));
  j["rank"] = table.label.rank;
  nlohmann::json hw = nlohmann::json::array();
  for (const auto& x : table.lambda) hw.push_back(rational_to_json(x));
  j["hw"] = hw;
  j["shift"] = table.shift;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : table.entries) {
    entries.push_back({{"bar", std::get<0>(key)}, {"i", std::get<1>(key)}, {"ket", std::get<2>(key)},
                       {"value", value_to_json(v)}});
  }
  j["entries"] = entries;
  return j;
}

WignerTable wigner_from_json(const nlohmann::json& j) {
  try {
    WignerTable t;
    t.label = AlgebraLabel{parse_family(j.at("family").get<std::string>()), j.at("rank").get<int>()};
    t.label.validate();
    for (const auto& x : j.at("hw")) t.lambda.push_back(rational_from_json(x));
    if (static_cast<int>(t.lambda.size()) != t.label.rank) throw ShapeError("hw length does not match the rank");
    t.shift = j.at("shift").get<int>();
    t.lambda_bar = add(t.lambda, standard_weight(t.label, t.shift));
    for (const auto& e : j.at("entries")) {
      WignerTable::Key key{e.at("bar").get<std::size_t>(), e.at("i").get<int>(), e.at("ket").get<std::size_t>()};
      AlgebraicValue v = value_from_json(e.at("value"));
      if (v.is_zero()) throw ShapeError("stored zero in a Wigner table");
      if (!t.entries.emplace(key, std::move(v)).second) throw ShapeError("duplicate Wigner table entry");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ShapeError(std::string("malformed Wigner table: ") + e.what());
  }
}

}  // namespace gtbcd
