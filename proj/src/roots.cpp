#include "gtbcd/roots.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace gtbcd {

std::string weight_to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += to_string(w[k]);
  }
  return s + "]";
}

bool is_spinor(const Weight& lambda) {
  return !lambda.empty() && std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) {
           return q.get_den() == 2;
         });
}

namespace {

bool all_integral(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string dominance_violation(const AlgebraLabel& label, const Weight& lambda) {
  const int n = label.rank;
  if (static_cast<int>(lambda.size()) != n) return "weight has " + std::to_string(lambda.size()) + " components, expected " + std::to_string(n);
  const bool integral = all_integral(lambda);
  const bool spinor = is_spinor(lambda);
  switch (label.family) {
    case Family::A:
    case Family::C:
      if (!integral) return "components must be integers";
      break;
    case Family::B:
    case Family::D:
      if (!integral && !spinor) return "components must be all integers or all half-odd integers";
      break;
  }
  for (int k = 0; k + 1 < n; ++k) {
    if (k + 2 == n && label.family == Family::D) {
      if (lambda[k] < abs(lambda[k + 1])) return "requires m_{-2} >= |m_{-1}|";
    } else if (lambda[k] < lambda[k + 1]) {
      return "components must be non-increasing";
    }
  }
  if ((label.family == Family::B || label.family == Family::C) && lambda[n - 1] < 0) return "last component must be nonnegative";
  if (label.family == Family::D && n == 1) return "family D requires rank >= 2";
  return {};
}

}  // namespace

bool is_dominant(const AlgebraLabel& label, const Weight& lambda) { return dominance_violation(label, lambda).empty(); }

void validate_dominant(const AlgebraLabel& label, const Weight& lambda) {
  label.validate();
  const auto why = dominance_violation(label, lambda);
  if (!why.empty()) throw DomainError("not a dominant weight for " + label.to_string() + ": " + weight_to_string(lambda) + " (" + why + ")");
}

std::vector<Weight> positive_roots(const AlgebraLabel& label) {
  const int n = label.rank;
  std::vector<Weight> out;
  auto unit = [&](int a) {
    Weight w(n, Rational(0));
    w[a] = 1;
    return w;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Weight w(n, Rational(0));
      w[a] = 1;
      w[b] = -1;
      out.push_back(w);
      if (label.family != Family::A) {
        w[b] = 1;
        out.push_back(w);
      }
    }
    if (label.family == Family::B) out.push_back(unit(a));
    if (label.family == Family::C) {
      Weight w = unit(a);
      w[a] = 2;
      out.push_back(w);
    }
  }
  return out;
}

Rational inner(const Weight& a, const Weight& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Weight rho(const AlgebraLabel& label) {
  Weight r(label.rank, Rational(0));
  for (const auto& a : positive_roots(label)) {
    for (int k = 0; k < label.rank; ++k) r[k] += a[k] / 2;
  }
  return r;
}

Weight dominant_representative(const AlgebraLabel& label, const Weight& mu) {
  Weight w = mu;
  if (label.family == Family::A) {
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  }
  int negatives = 0;
  bool has_zero = false;
  for (auto& x : w) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  if (label.family == Family::D && negatives % 2 == 1 && !has_zero) w.back() = -w.back();
  return w;
}

std::vector<Weight> weyl_orbit(const AlgebraLabel& label, const Weight& mu) {
  std::set<Weight> orbit;
  Weight base = mu;
  std::sort(base.begin(), base.end());
  const int n = label.rank;
  do {
    if (label.family == Family::A) {
      orbit.insert(base);
      continue;
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      Weight w = base;
      int flips = 0;
      for (int k = 0; k < n; ++k) {
        if (mask & (1 << k)) {
          w[k] = -w[k];
          ++flips;
        }
      }
      if (label.family == Family::D && flips % 2 == 1) {
        // Odd sign changes are allowed only when they can be compensated by a zero entry.
        if (std::none_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; })) continue;
      }
      orbit.insert(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return {orbit.begin(), orbit.end()};
}

Integer weyl_dim(const AlgebraLabel& label, const Weight& lambda) {
  validate_dominant(label, lambda);
  const Weight r = rho(label);
  Weight lr = lambda;
  for (int k = 0; k < label.rank; ++k) lr[k] += r[k];
  Rational d = 1;
  for (const auto& a : positive_roots(label)) d *= inner(lr, a) / inner(r, a);
  if (d.get_den() != 1) throw IntegrityError("Weyl dimension is not an integer");
  return d.get_num();
}

namespace {

struct MemoKey {
  AlgebraLabel label;
  Weight lambda;
  friend bool operator<(const MemoKey& a, const MemoKey& b) {
    if (a.label == b.label) return a.lambda < b.lambda;
    return a.label < b.label;
  }
};

std::shared_mutex g_memo_mutex;
std::map<MemoKey, std::map<Weight, Integer>>& memo() {
  static std::map<MemoKey, std::map<Weight, Integer>> table;
  return table;
}

// Multiplicities of the dominant weights of V^lambda.
std::map<Weight, Integer> dominant_multiplicities(const AlgebraLabel& label, const Weight& lambda) {
  const auto roots = positive_roots(label);
  const Weight r = rho(label);
  std::set<Weight> dominant{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : roots) {
      Weight nu = mu;
      for (int k = 0; k < label.rank; ++k) nu[k] -= a[k];
      if (!is_dominant(label, nu) || nu != dominant_representative(label, nu)) continue;
      if (dominant.insert(nu).second) queue.push_back(nu);
    }
  }
  std::vector<Weight> order(dominant.begin(), dominant.end());
  std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) { return inner(x, r) > inner(y, r); });
  auto shifted_norm = [&](const Weight& w) {
    Weight s = w;
    for (int k = 0; k < label.rank; ++k) s[k] += r[k];
    return inner(s, s);
  };
  const Rational top = shifted_norm(lambda);
  std::map<Weight, Integer> mult;
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : roots) {
      Weight nu = mu;
      for (;;) {
        for (int k = 0; k < label.rank; ++k) nu[k] += a[k];
        auto it = mult.find(dominant_representative(label, nu));
        if (it == mult.end()) break;
        sum += Rational(it->second) * inner(nu, a);
      }
    }
    const Rational denom = top - shifted_norm(mu);
    if (denom == 0) throw IntegrityError("Freudenthal denominator vanished");
    const Rational m = 2 * sum / denom;
    if (m.get_den() != 1) throw IntegrityError("non-integral Freudenthal multiplicity");
    if (m > 0) mult[mu] = m.get_num();
  }
  return mult;
}

}  // namespace

std::map<Weight, Integer> freudenthal(const AlgebraLabel& label, const Weight& lambda) {
  validate_dominant(label, lambda);
  const MemoKey key{label, lambda};
  {
    std::shared_lock lock(g_memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  std::map<Weight, Integer> full;
  for (const auto& [mu, m] : dominant_multiplicities(label, lambda)) {
    for (const auto& w : weyl_orbit(label, mu)) full[w] = m;
  }
  std::unique_lock lock(g_memo_mutex);
  memo().emplace(key, full);  // idempotent: a concurrent insert of the same key is identical
  return full;
}

Rational casimir_eigenvalue(const AlgebraLabel& label, const Weight& lambda) {
  validate_dominant(label, lambda);
  const Weight r = rho(label);
  Weight s = lambda;
  for (int k = 0; k < label.rank; ++k) s[k] += 2 * r[k];
  return inner(lambda, s);
}

std::vector<Weight> standard_weights(const AlgebraLabel& label) {
  std::vector<Weight> out;
  for (int c : coordinates(label)) {
    Weight w(label.rank, Rational(0));
    if (c < 0) w[weight_index(label, c)] = 1;
    if (c > 0) w[weight_index(label, -c)] = -1;
    out.push_back(w);
  }
  return out;
}

std::vector<Weight> tensor_with_standard(const AlgebraLabel& label, const Weight& lambda) {
  std::map<Weight, Integer> character;
  for (const auto& [mu, m] : freudenthal(label, lambda)) {
    for (const auto& s : standard_weights(label)) {
      Weight w = mu;
      for (int k = 0; k < label.rank; ++k) w[k] += s[k];
      character[w] += m;
    }
  }
  const Weight r = rho(label);
  std::vector<Weight> out;
  for (;;) {
    const Weight* best = nullptr;
    for (const auto& [w, m] : character) {
      if (m == 0) continue;
      if (m < 0) throw IntegrityError("negative multiplicity while decomposing a character");
      if (best == nullptr || inner(w, r) > inner(*best, r)) best = &w;
    }
    if (best == nullptr) break;
    const Weight top = *best;
    if (!is_dominant(label, top)) throw IntegrityError("character peeling reached a non-dominant weight");
    const Integer count = character[top];
    for (Integer c = 0; c < count; ++c) out.push_back(top);
    for (const auto& [w, m] : freudenthal(label, top)) character[w] -= m * count;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gtbcd
