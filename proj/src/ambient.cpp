#include "gtbcd/ambient.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

namespace gtbcd {

namespace {

Weight coordinate_weight(const AlgebraLabel& label, int c) {
  Weight w(label.rank, Rational(0));
  if (c < 0) w[c + label.rank] += 1;
  if (c > 0) w[label.rank - c] -= 1;
  return w;
}

void add_to(Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

// k-th exterior power of the defining representation, basis = increasing
// k-subsets of coordinate positions, form = identity.
class ExteriorPower : public AmbientFactor {
 public:
  ExteriorPower(const AlgebraLabel& label, int k) : label_(label) {
    const auto coords = coordinates(label);
    const int d = static_cast<int>(coords.size());
    if (k < 0 || k > d) throw DomainError("exterior power degree out of range");
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(subset.size()) == k) {
        index_.emplace(subset, subsets_.size());
        subsets_.push_back(subset);
        return;
      }
      for (int p = start; p < d; ++p) {
        subset.push_back(p);
        rec(p + 1);
        subset.pop_back();
      }
    };
    rec(0);
    for (int ci : coords) {
      for (int cj : coords) {
        const GeneratorId g{ci, cj};
        auto& cols = table_[g];
        cols.assign(d, {});
        for (const auto& [r, c, v] : defining_entries(label, g)) {
          cols[coordinate_position(label, c)].emplace_back(coordinate_position(label, r), Rational(v));
        }
      }
    }
    for (int p = 0; p < d; ++p) coord_weight_.push_back(coordinate_weight(label, coords[p]));
  }

  std::size_t dimension() const override { return subsets_.size(); }

  std::vector<std::pair<std::size_t, Rational>> apply(GeneratorId g, std::size_t col) const override {
    std::vector<std::pair<std::size_t, Rational>> out;
    const auto it = table_.find(g);
    if (it == table_.end()) return out;
    const auto& s = subsets_[col];
    for (int p : s) {
      for (const auto& [r, v] : it->second[p]) {
        if (r == p) {
          out.emplace_back(col, v);
          continue;
        }
        if (std::find(s.begin(), s.end(), r) != s.end()) continue;
        std::vector<int> t = s;
        int between = 0;
        for (int q : s) {
          if (q > std::min(p, r) && q < std::max(p, r)) ++between;
        }
        std::replace(t.begin(), t.end(), p, r);
        std::sort(t.begin(), t.end());
        out.emplace_back(index_.at(t), between % 2 ? Rational(-v) : v);
      }
    }
    return out;
  }

  Rational form(std::size_t) const override { return 1; }

  Weight weight(std::size_t index) const override {
    Weight w(label_.rank, Rational(0));
    for (int p : subsets_[index]) add_to(w, coord_weight_[p]);
    return w;
  }

  std::size_t index_of(const std::vector<int>& subset) const { return index_.at(subset); }

 private:
  AlgebraLabel label_;
  std::vector<std::vector<int>> subsets_;
  std::map<std::vector<int>, std::size_t> index_;
  std::map<GeneratorId, std::vector<std::vector<std::pair<int, Rational>>>> table_;
  std::vector<Weight> coord_weight_;
};

// Spin representation on the exterior algebra of n fermion modes; mode a
// carries the weight eps_{-a}.  For B the basis is rescaled by sqrt(2)^N so
// that all entries are rational; the invariant form becomes 2^N.
class Spin : public AmbientFactor {
 public:
  explicit Spin(const AlgebraLabel& label) : label_(label) {
    if (label.family != Family::B && label.family != Family::D) throw DomainError("spin representations exist for B and D only");
    if (label.rank > 20) throw DomainError("spin representation too large");
  }

  std::size_t dimension() const override { return std::size_t{1} << label_.rank; }

  std::vector<std::pair<std::size_t, Rational>> apply(GeneratorId g, std::size_t s) const override {
    std::vector<std::pair<std::size_t, Rational>> out;
    const int i = g.i;
    const int j = g.j;
    const bool b = label_.family == Family::B;
    auto emit = [&](std::optional<std::pair<std::size_t, int>> r, const Rational& scale) {
      if (r && scale != 0) out.emplace_back(r->first, r->second * scale);
    };
    if (i < 0 && j < 0) {
      const int a = -i;
      const int c = -j;
      emit(compose(s, {{true, a}, {false, c}}), 1);
      if (a == c) out.emplace_back(s, Rational(-1, 2));
    } else if (i > 0 && j > 0) {
      emit(compose(s, {{true, j}, {false, i}}), -1);
      if (i == j) out.emplace_back(s, Rational(1, 2));
    } else if (i < 0 && j > 0) {
      emit(compose(s, {{true, -i}, {true, j}}), b ? Rational(1, 2) : Rational(1));
    } else if (i > 0 && j < 0) {
      emit(compose(s, {{false, i}, {false, -j}}), b ? Rational(2) : Rational(1));
    } else if (b && i < 0 && j == 0) {
      emit(compose(s, {{true, -i}}), Rational(parity(s), 2));
    } else if (b && i == 0 && j < 0) {
      auto r = compose(s, {{false, -j}});
      if (r) out.emplace_back(r->first, Rational(r->second * parity(r->first)));
    } else if (b && i > 0 && j == 0) {
      auto r = compose(s, {{false, i}});
      if (r) out.emplace_back(r->first, Rational(-r->second * parity(r->first)));
    } else if (b && i == 0 && j > 0) {
      emit(compose(s, {{true, j}}), Rational(-parity(s), 2));
    }
    // Merge a diagonal term with a coinciding number-operator term.
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<std::size_t, Rational>> merged;
    for (auto& e : out) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    return merged;
  }

  Rational form(std::size_t s) const override {
    if (label_.family == Family::D) return 1;
    return Rational(Integer(1) << static_cast<mp_bitcnt_t>(std::popcount(s)));
  }

  Weight weight(std::size_t s) const override {
    Weight w(label_.rank);
    for (int a = 1; a <= label_.rank; ++a) w[label_.rank - a] = (s >> (a - 1)) & 1 ? Rational(1, 2) : Rational(-1, 2);
    return w;
  }

 private:
  static int parity(std::size_t s) { return std::popcount(s) % 2 ? -1 : 1; }

  // Applies a product of creation (true) / annihilation (false) operators,
  // rightmost first; returns the image basis state and its sign.
  static std::optional<std::pair<std::size_t, int>> compose(std::size_t s, std::vector<std::pair<bool, int>> ops) {
    int sign = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const std::size_t bit = std::size_t{1} << (it->second - 1);
      const bool occupied = (s & bit) != 0;
      if (occupied == it->first) return std::nullopt;
      if (std::popcount(s & (bit - 1)) % 2) sign = -sign;
      s ^= bit;
    }
    return std::make_pair(s, sign);
  }

  AlgebraLabel label_;
};

// One-dimensional character of gl_n: F_cc acts by `shift`.
class Character : public AmbientFactor {
 public:
  Character(const AlgebraLabel& label, Rational shift) : label_(label), shift_(std::move(shift)) {}
  std::size_t dimension() const override { return 1; }
  std::vector<std::pair<std::size_t, Rational>> apply(GeneratorId g, std::size_t) const override {
    if (g.i == g.j && g.i < 0) return {{0, shift_}};
    return {};
  }
  Rational form(std::size_t) const override { return 1; }
  Weight weight(std::size_t) const override { return Weight(label_.rank, shift_); }

 private:
  AlgebraLabel label_;
  Rational shift_;
};

}  // namespace

std::unique_ptr<AmbientFactor> make_exterior_power(const AlgebraLabel& label, int k) {
  return std::make_unique<ExteriorPower>(label, k);
}
std::unique_ptr<AmbientFactor> make_spin(const AlgebraLabel& label) { return std::make_unique<Spin>(label); }
std::unique_ptr<AmbientFactor> make_character(const AlgebraLabel& label, const Rational& shift) {
  if (label.family != Family::A) throw DomainError("characters are used for gl only");
  return std::make_unique<Character>(label, shift);
}

AmbientModule::AmbientModule(const AlgebraLabel& label, const Weight& lambda) : label_(label) {
  validate_dominant(label, lambda);
  const int n = label.rank;
  std::vector<std::size_t> top;  // factor highest basis indices
  Weight rest = lambda;
  if (label.family == Family::A) {
    const Rational s = lambda.back();
    if (s != 0) {
      factors_.push_back(make_character(label, s));
      top.push_back(0);
    }
    for (auto& x : rest) x -= s;
  } else if (is_spinor(lambda)) {
    const bool negative = label.family == Family::D && lambda.back() < 0;
    factors_.push_back(make_spin(label));
    std::size_t state = (std::size_t{1} << n) - 1;
    if (negative) state &= ~std::size_t{1};
    top.push_back(state);
    for (int i = 0; i < n; ++i) rest[i] -= (negative && i == n - 1) ? Rational(-1, 2) : Rational(1, 2);
  }
  const bool negative_last = label.family == Family::D && rest.back() < 0;
  if (negative_last) rest.back() = -rest.back();
  for (const auto& x : rest) {
    if (x.get_den() != 1) throw DomainError("highest weight " + weight_to_string(lambda) + " is not realizable");
  }
  const long width = rest.empty() ? 0 : rest.front().get_num().get_si();
  for (long column = 1; column <= width; ++column) {
    int length = 0;
    while (length < n && rest[length] >= column) ++length;
    auto power = std::make_unique<ExteriorPower>(label, length);
    std::vector<int> subset;
    for (int p = 0; p < length; ++p) subset.push_back(p);
    if (negative_last && length == n) subset.back() = coordinate_position(label, 1);
    std::sort(subset.begin(), subset.end());
    top.push_back(power->index_of(subset));
    factors_.push_back(std::move(power));
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t f = factors_.size(); f-- > 0;) {
    strides_[f] = dimension_;
    dimension_ *= factors_[f]->dimension();
  }
  std::size_t h = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) h += top[f] * strides_[f];
  highest_[h] = 1;
}

std::vector<std::size_t> AmbientModule::split(std::size_t index) const {
  std::vector<std::size_t> parts(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) parts[f] = (index / strides_[f]) % factors_[f]->dimension();
  return parts;
}

SparseVector AmbientModule::apply(GeneratorId g, const SparseVector& v) const {
  SparseVector out;
  for (const auto& [index, value] : v) {
    const auto parts = split(index);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      for (const auto& [r, c] : factors_[f]->apply(g, parts[f])) {
        const std::size_t target = index - parts[f] * strides_[f] + r * strides_[f];
        auto it = out.find(target);
        if (it == out.end()) {
          out.emplace(target, value * c);
        } else {
          it->second += value * c;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  return out;
}

Rational AmbientModule::form(std::size_t index) const {
  Rational g = 1;
  const auto parts = split(index);
  for (std::size_t f = 0; f < factors_.size(); ++f) g *= factors_[f]->form(parts[f]);
  return g;
}

Rational AmbientModule::inner(const SparseVector& a, const SparseVector& b) const {
  Rational s = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      s += form(ia->first) * ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return s;
}

}  // namespace gtbcd
