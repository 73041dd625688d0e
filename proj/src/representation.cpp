#include "gtbcd/representation.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "gtbcd/ambient.hpp"

namespace gtbcd {

namespace {

GeneratorId embed_times(GeneratorId g, int times) {
  for (int t = 0; t < times; ++t) g = embed_generator(g);
  return g;
}

bool has_roots(Family family, int k) {
  if (k <= 0) return false;
  if (k == 1 && (family == Family::A || family == Family::D)) return false;
  return true;
}

// Dominance of the next row as a highest weight of g_{k-1}.
bool dominant_below(Family family, const Row& row) {
  const int k = static_cast<int>(row.size());
  if (!has_roots(family, k)) return true;
  return is_dominant({family, k}, row);
}

Weight add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<Rational> choice_key(const LevelChoice& c) {
  std::vector<Rational> key = c.primed;
  key.emplace_back(1 - c.sigma);
  return key;
}

struct Leaf {
  Pattern pattern;
  SparseVector vector;
  Weight weight;
};

class ChainBuilder {
 public:
  ChainBuilder(const AmbientModule& ambient, const AlgebraLabel& label) : ambient_(ambient), label_(label) {}

  void descend(int k, const SparseVector& u, const Weight& wu, Pattern& current) {
    const Family family = label_.family;
    if (k == 0 || (k == 1 && !has_roots(family, 1))) {
      leaves.push_back({current, u, wu});
      return;
    }
    const Row row = current.level(k).row;

    std::map<std::pair<Row, Rational>, std::vector<LevelChoice>> expected;
    std::size_t expected_total = 0;
    for (auto& choice : level_choices(family, row)) {
      const Rational w = level_weight(family, row, choice.primed, choice.sigma, choice.next_row);
      expected[{choice.next_row, w}].push_back(std::move(choice));
      ++expected_total;
    }
    for (auto& [key, list] : expected) {
      std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return choice_key(a) > choice_key(b); });
    }

    // Weight spaces of the g_k-submodule generated from u.
    const auto lowering = chain_simple_lowering(label_, k);
    std::map<Weight, std::vector<SparseVector>> spaces;
    std::map<Weight, EchelonBasis> echelon;
    std::deque<std::pair<Weight, std::size_t>> queue;
    spaces[wu].push_back(u);
    echelon[wu].insert(u);
    queue.emplace_back(wu, 0);
    while (!queue.empty()) {
      const auto [w, index] = queue.front();
      queue.pop_front();
      const SparseVector v = spaces[w][index];
      for (const auto& g : lowering) {
        SparseVector x = ambient_.apply(g, v);
        if (x.empty()) continue;
        const Weight w2 = add(w, generator_weight(label_, g));
        if (echelon[w2].insert(x)) {
          spaces[w2].push_back(std::move(x));
          queue.emplace_back(w2, spaces[w2].size() - 1);
        }
      }
    }

    // Highest vectors of g_{k-1}, matched with the expected level data.
    const auto raising = chain_simple_raising(label_, k - 1);
    std::size_t found = 0;
    for (const auto& [w, basis] : spaces) {
      const Row next(w.begin(), w.begin() + (k - 1));
      const Rational lw = w[k - 1];
      const auto it = expected.find({next, lw});
      const std::size_t want = it == expected.end() ? 0 : it->second.size();
      if (want == 0 && !dominant_below(family, next)) continue;
      const auto kernel = highest_coefficients(basis, raising);
      if (kernel.size() != want) {
        throw IntegrityError("g_" + std::to_string(k - 1) + " highest vectors of weight " + weight_to_string(w) + " in the g_" +
                             std::to_string(k) + "-module " + weight_to_string(row) + ": found " +
                             std::to_string(kernel.size()) + ", patterns predict " + std::to_string(want));
      }
      if (want == 0) continue;
      std::vector<SparseVector> highest;
      for (const auto& c : kernel) {
        SparseVector h;
        for (std::size_t t = 0; t < basis.size(); ++t) axpy(h, c[t], basis[t]);
        for (const auto& e : highest) axpy(h, -ambient_.inner(e, h) / ambient_.inner(e, e), e);
        // Sign: the first nonzero overlap with the generating words is positive.
        for (const auto& word : basis) {
          const Rational overlap = ambient_.inner(word, h);
          if (overlap == 0) continue;
          if (overlap < 0) h = scaled(h, Rational(-1));
          break;
        }
        highest.push_back(std::move(h));
      }
      for (std::size_t q = 0; q < want; ++q) {
        const auto& choice = it->second[q];
        current.level(k).primed = choice.primed;
        current.level(k).sigma = choice.sigma;
        if (k >= 2) current.level(k - 1).row = next;
        descend(k - 1, highest[q], w, current);
      }
      found += want;
    }
    if (found != expected_total) {
      throw IntegrityError("g_" + std::to_string(k) + "-module " + weight_to_string(row) + " split into " +
                           std::to_string(found) + " submodules, patterns predict " + std::to_string(expected_total));
    }
  }

  std::vector<Leaf> leaves;

 private:
  // Coefficient vectors (w.r.t. `basis`) spanning the joint kernel of the
  // raising operators, in the canonical reduced echelon form.
  std::vector<std::vector<Rational>> highest_coefficients(const std::vector<SparseVector>& basis,
                                                          const std::vector<GeneratorId>& raising) const {
    const std::size_t m = basis.size();
    if (raising.empty()) {
      std::vector<std::vector<Rational>> id(m, std::vector<Rational>(m, Rational(0)));
      for (std::size_t t = 0; t < m; ++t) id[t][t] = 1;
      return id;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rows;
    DenseMatrix matrix;
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t r = 0; r < raising.size(); ++r) {
        for (const auto& [index, value] : ambient_.apply(raising[r], basis[t])) {
          auto [pos, inserted] = rows.try_emplace({r, index}, matrix.size());
          if (inserted) matrix.emplace_back(m, Rational(0));
          matrix[pos->second][t] = value;
        }
      }
    }
    return nullspace(std::move(matrix), m);
  }

  const AmbientModule& ambient_;
  AlgebraLabel label_;
};

}  // namespace

std::vector<GeneratorId> chain_simple_raising(const AlgebraLabel& label, int k) {
  if (k > label.rank) throw DomainError("chain level above the rank");
  if (!has_roots(label.family, k)) return {};
  auto gens = simple_raising({label.family, k});
  for (auto& g : gens) g = embed_times(g, label.rank - k);
  return gens;
}

std::vector<GeneratorId> chain_simple_lowering(const AlgebraLabel& label, int k) {
  auto gens = chain_simple_raising(label, k);
  for (auto& g : gens) g = {g.j, g.i};
  return gens;
}

Representation::Representation(const AlgebraLabel& label, const Weight& lambda)
    : label_(label), lambda_(lambda), ambient_(std::make_unique<AmbientModule>(label, lambda)) {
  const int n = label.rank;
  ChainBuilder builder(*ambient_, label);
  Pattern current;
  current.label = label;
  current.levels.resize(n);
  current.level(n).row = lambda;
  builder.descend(n, ambient_->highest_vector(), lambda, current);

  auto& leaves = builder.leaves;
  std::sort(leaves.begin(), leaves.end(), [](const Leaf& a, const Leaf& b) { return pattern_before(a.pattern, b.pattern); });
  const auto expected = enumerate_patterns(label, lambda);
  if (expected.size() != leaves.size()) {
    throw IntegrityError("construction produced " + std::to_string(leaves.size()) + " basis vectors, expected " +
                         std::to_string(expected.size()));
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i].pattern != expected[i]) throw IntegrityError("construction produced the unexpected pattern " + leaves[i].pattern.to_string());
    if (pattern_weight(leaves[i].pattern) != leaves[i].weight) {
      throw IntegrityError("basis vector of " + leaves[i].pattern.to_string() + " has weight " + weight_to_string(leaves[i].weight));
    }
    patterns_.push_back(leaves[i].pattern);
    weights_.push_back(leaves[i].weight);
    index_.emplace(pattern_key(leaves[i].pattern), i);
    by_weight_[leaves[i].weight].push_back(i);
    norms_.push_back(ambient_->inner(leaves[i].vector, leaves[i].vector));
    vectors_.push_back(std::move(leaves[i].vector));
  }

  std::map<GeneratorId, SparseOperator> simple;
  for (const auto& g : simple_lowering(label)) {
    auto lowering = direct_op(g);
    simple.emplace(GeneratorId{g.j, g.i}, raising_of(lowering));
    simple.emplace(g, std::move(lowering));
  }
  for (const auto& h : cartan_generators(label)) {
    SparseOperator d;
    d.label = label;
    d.hw = lambda;
    d.gen = h;
    d.dim = dimension();
    const int index = weight_index(label, h.i);
    for (std::size_t i = 0; i < dimension(); ++i) d.add(i, i, weights_[i][index]);
    simple.emplace(h, std::move(d));
  }
  std::map<GeneratorId, SparseOperator> reference;
  for (const auto& g : generator_basis(label)) {
    if (is_lowering(g) && !simple.count(g)) reference.emplace(g, direct_op(g));
  }
  ops_ = close_under_brackets(label, simple, &reference);
}

Representation::~Representation() = default;

std::shared_ptr<const Representation> Representation::get(const AlgebraLabel& label, const Weight& lambda) {
  static std::mutex mutex;
  static std::map<std::pair<AlgebraLabel, Weight>, std::shared_ptr<const Representation>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{label, lambda}];
  if (!slot) slot = std::make_shared<const Representation>(label, lambda);
  return slot;
}

std::size_t Representation::index_of(const Pattern& p) const {
  const auto it = index_.find(pattern_key(p));
  if (it == index_.end() || patterns_[it->second] != p) throw ShapeError("pattern " + p.to_string() + " is not in the basis");
  return it->second;
}

SparseOperator Representation::op(GeneratorId g) const {
  const auto coords = coordinates(label_);
  const auto known = [&](int c) { return std::find(coords.begin(), coords.end(), c) != coords.end(); };
  if (!known(g.i) || !known(g.j)) {
    throw DomainError("generator " + g.to_string() + " is not defined for " + label_.to_string());
  }
  const auto expansion = expand_generator(label_, g);
  SparseOperator r;
  if (expansion.empty()) {
    r.label = label_;
    r.hw = lambda_;
    r.dim = dimension();
  } else {
    r = scaled(ops_.at(expansion.front().first), AlgebraicValue(expansion.front().second));
  }
  r.gen = g;
  return r;
}

RationalOperator Representation::unnormalized_op(GeneratorId g) const {
  RationalOperator r;
  if (!is_generator(label_, g)) {
    expand_generator(label_, g);  // throws for indices outside the algebra
    return r;
  }
  const Weight shift = generator_weight(label_, g);
  for (std::size_t j = 0; j < dimension(); ++j) {
    SparseVector v = ambient_->apply(g, vectors_[j]);
    if (v.empty()) continue;
    const auto bucket = by_weight_.find(add(weights_[j], shift));
    if (bucket != by_weight_.end()) {
      for (std::size_t i : bucket->second) {
        const Rational x = ambient_->inner(vectors_[i], v) / norms_[i];
        if (x == 0) continue;
        r[{i, j}] = x;
        axpy(v, -x, vectors_[i]);
      }
    }
    if (!v.empty()) throw IntegrityError(g.to_string() + " maps a basis vector outside the module");
  }
  return r;
}

SparseOperator Representation::direct_op(GeneratorId g) const {
  SparseOperator r;
  r.label = label_;
  r.hw = lambda_;
  r.gen = g;
  r.dim = dimension();
  for (const auto& [key, x] : unnormalized_op(g)) {
    r.add(key.first, key.second, AlgebraicValue::sqrt_of(norms_[key.first] / norms_[key.second]) * AlgebraicValue(x));
  }
  return r;
}

SparseOperator cartan(const AlgebraLabel& label, const Weight& lambda, int k) {
  if (k >= 0 || k < -label.rank) throw DomainError("Cartan index must lie in -n..-1");
  SparseOperator d;
  d.label = label;
  d.hw = lambda;
  d.gen = {k, k};
  const auto patterns = enumerate_patterns(label, lambda);
  d.dim = patterns.size();
  const int index = weight_index(label, k);
  for (std::size_t i = 0; i < patterns.size(); ++i) d.add(i, i, pattern_weight(patterns[i])[index]);
  return d;
}

SparseOperator raising_of(const SparseOperator& lowering) { return transpose(lowering); }

std::map<GeneratorId, SparseOperator> close_under_brackets(const AlgebraLabel& label,
                                                           const std::map<GeneratorId, SparseOperator>& simple,
                                                           const std::map<GeneratorId, SparseOperator>* reference) {
  std::map<GeneratorId, SparseOperator> known;
  for (const auto& [g, op] : simple) {
    const auto expansion = expand_generator(label, g);
    if (expansion.empty()) continue;
    auto normalized = scaled(op, AlgebraicValue(1 / expansion.front().second));
    normalized.gen = expansion.front().first;
    known.emplace(expansion.front().first, std::move(normalized));
  }
  const auto basis = generator_basis(label);
  bool progress = true;
  while (progress && known.size() < basis.size()) {
    progress = false;
    std::map<GeneratorId, SparseOperator> fresh;
    for (const auto& [a, opa] : known) {
      if (is_cartan(a)) continue;
      for (const auto& [b, opb] : known) {
        if (is_cartan(b) || !(a < b)) continue;
        const auto expansion = bracket(label, a, b);
        if (expansion.size() != 1) continue;
        const auto& [g, c] = expansion.front();
        if (is_cartan(g) || known.count(g) || fresh.count(g)) continue;
        auto op = scaled(commutator(opa, opb), AlgebraicValue(1 / c));
        op.gen = g;
        fresh.emplace(g, std::move(op));
      }
    }
    for (auto& [g, op] : fresh) known.emplace(g, std::move(op));
    progress = !fresh.empty();
  }
  for (const auto& g : basis) {
    if (!known.count(g)) throw IntegrityError("bracket closure does not reach " + g.to_string());
  }
  if (reference) {
    for (const auto& [g, op] : *reference) {
      const auto expansion = expand_generator(label, g);
      if (expansion.empty()) continue;
      const auto& closed = known.at(expansion.front().first);
      if (!same_entries(scaled(closed, AlgebraicValue(expansion.front().second)), op)) {
        throw IntegrityError("bracket closure disagrees with the directly built " + g.to_string());
      }
    }
  }
  return known;
}

}  // namespace gtbcd
