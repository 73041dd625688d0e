#include "gtbcd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "gtbcd/bcd_action.hpp"
#include "gtbcd/linalg.hpp"
#include "gtbcd/representation.hpp"
#include "gtbcd/wigner.hpp"

namespace gtbcd {

namespace {

using Clock = std::chrono::steady_clock;

CaseResult start(const AlgebraLabel& label, const Weight& lambda, std::string check) {
  CaseResult r;
  r.label = label;
  r.lambda = lambda;
  r.check = std::move(check);
  return r;
}

// Runs `body` with timing; an exception turns the case into a failure whose
// witness is the exception message.
CaseResult timed(CaseResult r, const std::function<void(CaseResult&)>& body) {
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    if (r.residual.empty()) r.residual = "error";
    r.witness = e.what();
  }
  r.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

Weight add(Weight a, const Weight& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

Rational rational_value(const AlgebraicValue& v) {
  if (v.is_zero()) return Rational(0);
  if (!v.is_rational()) throw ShapeError("value " + v.to_string() + " is not rational");
  return v.terms().begin()->second;
}

// ---------------------------------------------------------------------------
// Wigner-Eckart blocks.

struct WeStats {
  std::size_t defects = 0;      // entries not proportional to the Wigner coefficients
  std::size_t max_defects = 0;  // blocks whose maximal element differs from the reduced element
  std::size_t blocks = 0;
  std::string witness;
};

std::vector<Rational> block_key(const Pattern& p) {
  const int n = p.label.rank;
  std::vector<Rational> key;
  const PatternLevel& top = p.level(n);
  key.insert(key.end(), top.row.begin(), top.row.end());
  key.push_back(Rational(1000 + static_cast<long>(top.primed.size())));
  key.insert(key.end(), top.primed.begin(), top.primed.end());
  key.push_back(Rational(top.sigma));
  const Row& below = p.level(n - 1).row;
  key.insert(key.end(), below.begin(), below.end());
  return key;
}

// The pattern of the block of p whose levels below n-1 are maximal.
Pattern block_maximal(const Pattern& p) {
  const int n = p.label.rank;
  const Pattern sub_max = max_pattern(AlgebraLabel{p.label.family, n - 1}, p.level(n - 1).row);
  Pattern out = p;
  for (int k = 1; k <= n - 1; ++k) out.level(k) = sub_max.level(k);
  return out;
}

WeStats wigner_eckart_stats(const AlgebraLabel& label, const Weight& lambda, GeneratorId g, bool check_maximal) {
  const int n = label.rank;
  if (n < 2) throw DomainError("the Wigner-Eckart factorization needs rank >= 2");
  const auto outside = [](int c) { return c == 0 || c == 1 || c == -1; };
  if (!is_generator(label, g) || !outside(g.i) || outside(g.j)) {
    throw DomainError("generator must be F(a,c) with a in {0,+-1} and |c| >= 2");
  }
  const int component = -g.j;  // F(a,c) transforms like e_{-c} under g_{n-1}
  const auto rep = Representation::get(label, lambda);
  const SparseOperator op = rep->op(g);
  const auto& pats = rep->patterns();
  const std::size_t d = rep->dimension();

  struct Member {
    std::size_t q, p;
    AlgebraicValue e, w;
  };
  std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, std::vector<Member>> blocks;
  for (std::size_t q = 0; q < d; ++q) {
    for (std::size_t p = 0; p < d; ++p) {
      AlgebraicValue e = op.at(q, p);
      AlgebraicValue w = sub_wigner(pats[q], component, pats[p]);
      if (e.is_zero() && w.is_zero()) continue;
      blocks[{block_key(pats[q]), block_key(pats[p])}].push_back({q, p, std::move(e), std::move(w)});
    }
  }

  WeStats s;
  s.blocks = blocks.size();
  const std::vector<Rational> gw = generator_weight(label, g);
  for (const auto& [key, members] : blocks) {
    const auto ref = std::find_if(members.begin(), members.end(), [](const Member& m) { return !m.w.is_zero(); });
    for (const auto& m : members) {
      const bool ok = ref == members.end() ? m.e.is_zero() : m.e * ref->w == ref->e * m.w;
      if (!ok) {
        if (s.defects++ == 0) {
          std::ostringstream os;
          os << "entry (" << m.q << "," << m.p << ") = " << m.e.to_string() << " with Wigner coefficient "
             << m.w.to_string();
          if (ref != members.end()) {
            os << "; block reference (" << ref->q << "," << ref->p << ") = " << ref->e.to_string() << " / "
               << ref->w.to_string();
          }
          s.witness = os.str();
        }
      }
    }
    if (!check_maximal || ref == members.end()) continue;
    const Pattern qmax = block_maximal(pats[ref->q]);
    const Pattern pmax = block_maximal(pats[ref->p]);
    Weight expected = add(pattern_weight(pmax), Weight(gw.begin(), gw.end()));
    if (pattern_weight(qmax) != expected) continue;  // no transition between the maximal vectors
    const AlgebraicValue reduced = ref->e * ref->w.inverse();
    const AlgebraicValue element = op.at(rep->index_of(qmax), rep->index_of(pmax));
    if (element != reduced) {
      if (s.max_defects++ == 0 && s.witness.empty()) {
        s.witness = "maximal element " + element.to_string() + " between " + qmax.to_string() + " and " +
                    pmax.to_string() + " differs from the reduced element " + reduced.to_string();
      }
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Suite plumbing.

using Task = std::function<CaseResult()>;

std::vector<CaseResult> run_pool(const std::vector<Task>& tasks) {
  std::vector<CaseResult> out(tasks.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(tasks.size(), std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

bool applies(const std::string& suite, const GridCase& c) {
  const auto& [label, lambda] = c;
  if (suite == "brackets") return weyl_dim(label, lambda) <= 200;
  if (suite == "gl-equivalence") return label.rank == 2 && (label.family == Family::B || label.family == Family::C);
  if (suite == "wigner-eckart") return label.rank == 3 && label.family != Family::A;
  if (suite == "prop-pp") return label.rank == 2 && label.family == Family::B;
  return true;
}

// Rank-2 entries plus the first rank-3 entry of each family.
std::vector<GridCase> equivariance_cases(const std::vector<GridCase>& cases) {
  std::vector<GridCase> out;
  std::set<Family> seen3;
  for (const auto& c : cases) {
    if (c.first.rank == 2) out.push_back(c);
    if (c.first.rank == 3 && seen3.insert(c.first.family).second) out.push_back(c);
  }
  return out;
}

void add_suite_tasks(const std::string& suite, const std::vector<GridCase>& cases, std::vector<Task>& tasks) {
  if (suite == "equivariance") {
    for (const auto& [label, lambda] : equivariance_cases(cases)) {
      for (const auto& bar : tensor_with_standard(label, lambda)) {
        for (int s : coordinates(label)) {
          if (add(lambda, standard_weight(label, s)) != bar) continue;
          tasks.push_back([label, lambda, s] { return check_wigner(label, lambda, s); });
        }
      }
    }
    return;
  }
  for (const auto& c : cases) {
    if (!applies(suite, c)) continue;
    const auto [label, lambda] = c;
    if (suite == "dimension") tasks.push_back([label, lambda] { return check_dimension(label, lambda); });
    if (suite == "weights") tasks.push_back([label, lambda] { return check_weights(label, lambda); });
    if (suite == "brackets") tasks.push_back([label, lambda] { return check_commutators(label, lambda); });
    if (suite == "casimir") tasks.push_back([label, lambda] { return check_casimir(label, lambda); });
    if (suite == "gl-equivalence") tasks.push_back([label, lambda] { return check_gl_equivalence(label, lambda); });
    if (suite == "wigner-eckart") tasks.push_back([label, lambda] { return check_wigner_eckart(label, lambda); });
    if (suite == "prop-pp") tasks.push_back([label, lambda] { return check_prop_pp(label, lambda); });
  }
  if (suite == "casimir") {
    // Spot values in the Euclidean normalization of the invariant form.
    const std::vector<std::tuple<AlgebraLabel, Weight, Rational>> spots = {
        {AlgebraLabel{Family::B, 2}, Weight{1, 0}, Rational(4)},
        {AlgebraLabel{Family::C, 2}, Weight{1, 0}, Rational(5)},
    };
    for (const auto& [label, lambda, value] : spots) {
      tasks.push_back([label, lambda, value] {
        CaseResult r = check_casimir(label, lambda, &value);
        r.check = "casimir-spot";
        return r;
      });
    }
  }
}

}  // namespace

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.passed; }));
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed();
  j["failures"] = report.failures();
  j["elapsed"] = report.elapsed;
  j["metadata"] = report.metadata;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : report.cases) {
    nlohmann::json hw = nlohmann::json::array();
    for (const auto& x : c.lambda) hw.push_back(to_string(x));
    nlohmann::json e = {{"family", std::string(1, family_char(c.label.family))},
                        {"rank", c.label.rank},
                        {"hw", hw},
                        {"check", c.check},
                        {"status", c.passed ? "pass" : "fail"},
                        {"residual", c.residual},
                        {"elapsed", c.elapsed}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["cases"].push_back(std::move(e));
  }
  return j;
}

std::vector<GridCase> acceptance_grid() {
  const Rational h(1, 2);
  const AlgebraLabel B1{Family::B, 1}, B2{Family::B, 2}, C2{Family::C, 2}, D2{Family::D, 2};
  const AlgebraLabel B3{Family::B, 3}, C3{Family::C, 3}, D3{Family::D, 3};
  return {
      {B1, {1}},          {B1, {h}},          {B1, {3}},
      {B2, {1, 0}},       {B2, {1, 1}},       {B2, {2, 1}},          {B2, {3 * h, h}},
      {C2, {1, 0}},       {C2, {1, 1}},       {C2, {2, 1}},
      {D2, {1, 0}},       {D2, {1, 1}},       {D2, {1, -1}},         {D2, {2, 1}},
      {B3, {1, 0, 0}},    {B3, {1, 1, 0}},    {B3, {1, 1, 1}},
      {C3, {1, 0, 0}},    {C3, {1, 1, 0}},
      {D3, {1, 0, 0}},    {D3, {1, 1, 0}},    {D3, {1, 1, -1}},
  };
}

CaseResult check_dimension(const AlgebraLabel& label, const Weight& lambda, const std::vector<Pattern>* patterns) {
  return timed(start(label, lambda, "dimension"), [&](CaseResult& r) {
    const std::vector<Pattern> own = patterns ? std::vector<Pattern>{} : enumerate_patterns(label, lambda);
    const std::vector<Pattern>& pats = patterns ? *patterns : own;
    const Integer expected = weyl_dim(label, lambda);
    std::size_t invalid = 0, duplicates = 0;
    std::set<std::vector<Rational>> seen;
    for (std::size_t k = 0; k < pats.size(); ++k) {
      const Pattern& p = pats[k];
      std::vector<std::string> problems;
      if (p.label != label || p.highest_weight() != lambda) {
        problems.push_back("pattern does not belong to " + label.to_string() + weight_to_string(lambda));
      } else {
        problems = validate(p);
      }
      if (!problems.empty()) {
        if (invalid++ == 0) r.witness = "pattern " + std::to_string(k) + " " + p.to_string() + ": " + problems.front();
        continue;
      }
      if (!seen.insert(pattern_key(p)).second) {
        if (duplicates++ == 0 && r.witness.empty()) r.witness = "pattern " + std::to_string(k) + " repeated";
      }
    }
    const Integer count(static_cast<unsigned long>(pats.size()));
    r.residual = "count " + count.get_str() + " vs weyl " + expected.get_str() + ", invalid " +
                 std::to_string(invalid) + ", duplicates " + std::to_string(duplicates);
    r.passed = count == expected && invalid == 0 && duplicates == 0;
    if (!r.passed && r.witness.empty()) r.witness = "pattern count differs from the Weyl dimension";
  });
}

CaseResult check_weights(const AlgebraLabel& label, const Weight& lambda) {
  return timed(start(label, lambda, "weights"), [&](CaseResult& r) {
    std::map<Weight, Integer> counted;
    for (const auto& p : enumerate_patterns(label, lambda)) counted[pattern_weight(p)] += 1;
    const auto oracle = freudenthal(label, lambda);
    std::size_t mismatches = 0;
    std::set<Weight> all;
    for (const auto& [w, m] : counted) all.insert(w);
    for (const auto& [w, m] : oracle) all.insert(w);
    for (const auto& w : all) {
      const auto a = counted.find(w);
      const auto b = oracle.find(w);
      const Integer ma = a == counted.end() ? Integer(0) : a->second;
      const Integer mb = b == oracle.end() ? Integer(0) : b->second;
      if (ma != mb && mismatches++ == 0) {
        r.witness = "weight " + weight_to_string(w) + ": patterns " + ma.get_str() + ", Freudenthal " + mb.get_str();
      }
    }
    r.residual = std::to_string(mismatches);
    r.passed = mismatches == 0;
  });
}

CaseResult check_commutators(const AlgebraLabel& label, const Weight& lambda,
                             const std::map<GeneratorId, SparseOperator>* ops) {
  return timed(start(label, lambda, "brackets"), [&](CaseResult& r) {
    const auto rep = Representation::get(label, lambda);
    const std::map<GeneratorId, SparseOperator>& table = ops ? *ops : rep->basis_operators();
    const auto basis = generator_basis(label);
    auto lookup = [&](GeneratorId g) -> const SparseOperator& {
      const auto it = table.find(g);
      if (it == table.end()) throw ShapeError("no operator for generator " + g.to_string());
      if (it->second.dim != rep->dimension()) throw ShapeError("operator " + g.to_string() + " has the wrong size");
      return it->second;
    };
    std::size_t failures = 0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        const SparseOperator lhs = commutator(lookup(basis[a]), lookup(basis[b]));
        std::vector<std::pair<Rational, const SparseOperator*>> terms;
        for (const auto& [g, c] : bracket(label, basis[a], basis[b])) terms.emplace_back(c, &lookup(g));
        SparseOperator rhs = terms.empty() ? identity_operator(label, lambda, rep->dimension()) : linear_combination(terms);
        if (terms.empty()) rhs.entries.clear();
        if (lhs.entries == rhs.entries) continue;
        if (failures++ == 0) {
          std::ostringstream os;
          os << "[" << basis[a].to_string() << ", " << basis[b].to_string() << "]";
          for (const auto& [key, v] : lhs.entries) {
            if (rhs.at(key.first, key.second) != v) {
              os << " differs at (" << key.first << "," << key.second << "): " << v.to_string() << " vs "
                 << rhs.at(key.first, key.second).to_string();
              break;
            }
          }
          r.witness = os.str();
        }
      }
    }
    r.residual = std::to_string(failures);
    r.passed = failures == 0;
  });
}

CaseResult check_casimir(const AlgebraLabel& label, const Weight& lambda, const Rational* expected) {
  return timed(start(label, lambda, "casimir"), [&](CaseResult& r) {
    const auto rep = Representation::get(label, lambda);
    const auto basis = generator_basis(label);
    const std::size_t m = basis.size();
    // Inverse of the Gram matrix of the invariant form gives the dual basis.
    DenseMatrix gram(m, std::vector<Rational>(2 * m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) gram[i][j] = trace_form(label, basis[i], basis[j]);
      gram[i][m + i] = 1;
    }
    const auto pivots = rref(gram, 2 * m);
    if (pivots.size() != m || pivots.back() >= m) throw IntegrityError("invariant form is degenerate");
    SparseOperator cas = identity_operator(label, lambda, rep->dimension());
    cas.entries.clear();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (gram[i][m + j] == 0) continue;
        const SparseOperator prod = multiply(rep->op(basis[i]), rep->op(basis[j]));
        for (const auto& [key, v] : prod.entries) cas.add(key.first, key.second, v * AlgebraicValue(gram[i][m + j]));
      }
    }
    const Rational value = casimir_eigenvalue(label, lambda);
    std::size_t off = 0;
    for (std::size_t i = 0; i < rep->dimension(); ++i) {
      for (std::size_t j = 0; j < rep->dimension(); ++j) {
        const AlgebraicValue want = i == j ? AlgebraicValue(value) : AlgebraicValue();
        if (cas.at(i, j) != want && off++ == 0) {
          r.witness = "C2(" + std::to_string(i) + "," + std::to_string(j) + ") = " + cas.at(i, j).to_string() +
                      ", expected " + want.to_string();
        }
      }
    }
    r.residual = "eigenvalue " + to_string(value) + ", deviating entries " + std::to_string(off);
    r.passed = off == 0;
    if (expected && *expected != value) {
      r.passed = false;
      r.witness = "eigenvalue " + to_string(value) + " differs from " + to_string(*expected);
    }
  });
}

CaseResult check_gl_equivalence(const AlgebraLabel& label, const Weight& lambda) {
  return timed(start(label, lambda, "gl-equivalence"), [&](CaseResult& r) {
    const auto rep = Representation::get(label, lambda);
    const auto closed = rank2_reduced_closed_form(label, lambda);
    const auto& pats = rep->patterns();
    std::size_t mismatches = 0, compared = 0;
    for (const auto& [g, reference] : closed) {
      const SparseOperator op = rep->op(g);
      for (std::size_t j = 0; j < pats.size(); ++j) {
        if (!level1_maximal(pats[j])) continue;
        for (std::size_t i = 0; i < pats.size(); ++i) {
          if (!level1_maximal(pats[i])) continue;
          const AlgebraicValue built = op.at(i, j);
          const AlgebraicValue kernel = reference.at(i, j);
          if (built.is_zero() && kernel.is_zero()) continue;
          ++compared;
          if (built != kernel && mismatches++ == 0) {
            r.witness = g.to_string() + " from " + pats[j].to_string() + " to " + pats[i].to_string() +
                        ": construction " + built.to_string() + ", gl_3 kernel " + kernel.to_string();
          }
        }
      }
    }
    r.residual = std::to_string(mismatches) + " of " + std::to_string(compared) + " elements differ";
    r.passed = mismatches == 0;
  });
}

CaseResult check_wigner_eckart(const AlgebraLabel& label, const Weight& lambda, GeneratorId g) {
  return timed(start(label, lambda, "wigner-eckart"), [&](CaseResult& r) {
    const WeStats s = wigner_eckart_stats(label, lambda, g, false);
    r.residual = std::to_string(s.defects) + " defects in " + std::to_string(s.blocks) + " blocks";
    r.passed = s.defects == 0 && s.blocks > 0;
    if (s.defects) r.witness = g.to_string() + ": " + s.witness;
    if (s.blocks == 0) r.witness = "no nonzero blocks";
  });
}

CaseResult check_prop_pp(const AlgebraLabel& label, const Weight& lambda) {
  return timed(start(label, lambda, "prop-pp"), [&](CaseResult& r) {
    if (label.family != Family::B || label.rank != 2) throw DomainError("stated for o_5");
    std::size_t defects = 0, max_defects = 0;
    for (GeneratorId g : {GeneratorId{-1, -2}, GeneratorId{1, -2}}) {
      const WeStats s = wigner_eckart_stats(label, lambda, g, true);
      defects += s.defects;
      max_defects += s.max_defects;
      if (r.witness.empty() && !s.witness.empty()) r.witness = g.to_string() + ": " + s.witness;
    }
    r.residual = std::to_string(defects) + " factorization defects, " + std::to_string(max_defects) +
                 " maximal-element defects";
    r.passed = defects == 0 && max_defects == 0;
  });
}

NullspaceOracle intertwiner_nullspace(const AlgebraLabel& label, const Weight& lambda, int shift) {
  const auto table = intertwiner(label, lambda, shift);
  const auto ket = Representation::get(label, lambda);
  const auto bar = Representation::get(label, table->lambda_bar);
  const auto coords = coordinates(label);
  const std::size_t d = ket->dimension();

  // Unknowns X(t, j) with weight(t) = weight(j), t = position(c) * d + i.
  std::map<Weight, std::vector<std::size_t>> tensor_by_weight, bar_by_weight;
  std::vector<Weight> tensor_weight(coords.size() * d);
  for (std::size_t a = 0; a < coords.size(); ++a) {
    const Weight sw = standard_weight(label, coords[a]);
    for (std::size_t i = 0; i < d; ++i) {
      tensor_weight[a * d + i] = add(sw, ket->weights()[i]);
      tensor_by_weight[tensor_weight[a * d + i]].push_back(a * d + i);
    }
  }
  for (std::size_t j = 0; j < bar->dimension(); ++j) bar_by_weight[bar->weights()[j]].push_back(j);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> unknown;
  for (const auto& [w, js] : bar_by_weight) {
    const auto it = tensor_by_weight.find(w);
    if (it == tensor_by_weight.end()) continue;
    for (std::size_t j : js)
      for (std::size_t t : it->second) unknown.emplace(std::make_pair(t, j), unknown.size());
  }

  // Equations sum_k X(t,k) Y(k,j) - sum_t' D(t,t') X(t',j) = 0, keyed by (t, j).
  std::vector<GeneratorId> gens = simple_raising(label);
  for (GeneratorId g : simple_lowering(label)) gens.push_back(g);
  std::vector<SparseVector> rows;
  for (GeneratorId g : gens) {
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> eqs;
    for (const auto& [key, y] : bar->unnormalized_op(g)) {
      const auto [k, j] = key;
      for (std::size_t t : tensor_by_weight[bar->weights()[k]]) {
        const auto u = unknown.find({t, k});
        if (u == unknown.end()) continue;
        eqs[{t, j}][u->second] += y;
      }
    }
    for (const auto& [key, delta] : tensor_unnormalized_op(label, *ket, g)) {
      const auto [t, tp] = key;
      const auto it = bar_by_weight.find(tensor_weight[tp]);
      if (it == bar_by_weight.end()) continue;
      for (std::size_t j : it->second) eqs[{t, j}][unknown.at({tp, j})] -= delta;
    }
    for (auto& [key, row] : eqs) {
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  EchelonBasis echelon;
  for (const auto& row : rows) echelon.insert(row);

  NullspaceOracle out;
  out.unknowns = unknown.size();
  out.nullity = unknown.size() - echelon.size();

  // The table in the rational coordinates of the unknowns (up to one global
  // scalar): value * sqrt(N_bar_j N_0 / (N_i N_bar_0)).
  std::vector<Rational> x(unknown.size());
  bool fits = !table->entries.empty();
  for (const auto& [key, value] : table->entries) {
    const auto [j, c, i] = key;
    const std::size_t t = static_cast<std::size_t>(coordinate_position(label, c)) * d + i;
    const auto u = unknown.find({t, j});
    if (u == unknown.end()) {
      fits = false;
      break;
    }
    const Rational ratio = bar->norms()[j] * ket->norms()[0] / (ket->norms()[i] * bar->norms()[0]);
    x[u->second] = rational_value(value * AlgebraicValue::sqrt_of(ratio));
  }
  if (fits) {
    for (const auto& row : rows) {
      Rational dot = 0;
      for (const auto& [id, c] : row) dot += c * x[id];
      if (dot != 0) {
        fits = false;
        break;
      }
    }
  }
  out.table_solves = fits;
  return out;
}

CaseResult check_wigner(const AlgebraLabel& label, const Weight& lambda, int shift) {
  return timed(start(label, lambda, "wigner[s=" + std::to_string(shift) + "]"), [&](CaseResult& r) {
    const auto table = intertwiner(label, lambda, shift);
    const std::size_t eq = equivariance_defects(*table);
    const std::size_t sel = selection_rule_defects(*table);
    const NullspaceOracle oracle = intertwiner_nullspace(label, lambda, shift);
    r.residual = "equivariance " + std::to_string(eq) + ", selection " + std::to_string(sel) + ", oracle nullity " +
                 std::to_string(oracle.nullity) + " of " + std::to_string(oracle.unknowns) + " unknowns";
    r.passed = eq == 0 && sel == 0 && oracle.nullity == 1 && oracle.table_solves;
    if (!r.passed) {
      r.witness = "lambda_bar " + weight_to_string(table->lambda_bar) +
                  (oracle.table_solves ? "" : "; table does not solve the oracle equations");
    }
  });
}

std::vector<std::string> suite_names() {
  return {"dimension", "weights", "brackets", "casimir", "gl-equivalence", "wigner-eckart", "equivariance", "prop-pp",
          "all"};
}

VerificationReport run_suite(const std::string& suite, const std::vector<GridCase>* cases) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw DomainError("unknown suite " + suite);
  const std::vector<GridCase> grid = cases ? *cases : acceptance_grid();
  std::vector<Task> tasks;
  if (suite == "all") {
    for (const auto& name : names)
      if (name != "all") add_suite_tasks(name, grid, tasks);
  } else {
    add_suite_tasks(suite, grid, tasks);
  }
  VerificationReport report;
  report.suite = suite;
  const auto t0 = Clock::now();
  report.cases = run_pool(tasks);
  report.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  std::sort(report.cases.begin(), report.cases.end(), [](const CaseResult& a, const CaseResult& b) {
    return std::tie(a.check, a.label, a.lambda) < std::tie(b.check, b.label, b.lambda);
  });
  report.metadata["arithmetic"] = "exact";
  report.metadata["basis"] = "orthonormal pattern basis from the chain construction";
  report.metadata["wigner-normalization"] = "coefficient of e_shift (x) (m)_max in Phi((m_bar)_max) is 1";
  if (suite == "all" || suite == "gl-equivalence") {
    report.metadata["gl-equivalence"] =
        "compares constructed elements between maximal level-1 patterns with the gl_3 kernel values as stated; "
        "no basis rescaling is applied";
  }
  return report;
}

}  // namespace gtbcd
