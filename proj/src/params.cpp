#include "extset/params.hpp"

#include <stdexcept>
#include <vector>

#include "extset/predicates.hpp"

namespace extset {

DegreeStats degree_stats(const Family& f) {
  const int n = f.ground_size();
  std::uint64_t best = 0;
  int best_i = 1;
  for (int i = 1; i <= n; ++i) {
    std::uint64_t deg = 0;
    for (SetMask m : f.members())
      if (mask_has(m, i)) ++deg;
    if (deg > best) {
      best = deg;
      best_i = i;
    }
  }
  return DegreeStats{best, best_i, f.size() - best};
}

SturdinessStats sturdiness(const Family& f) {
  const int n = f.ground_size();
  if (n < 2) throw std::invalid_argument("sturdiness requires ground size >= 2");
  bool have = false;
  SturdinessStats best{0, 1, 2};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::uint64_t count = 0;
      for (SetMask m : f.members())
        if (mask_has(m, i) && !mask_has(m, j)) ++count;
      if (!have || count < best.value) {
        best = SturdinessStats{count, i, j};
        have = true;
      }
    }
  return best;
}

namespace {

void check_probability(const Rational& p) {
  if (!(p > 0 && p < 1))
    throw std::invalid_argument("product measure requires 0 < p < 1, got " + rational_to_string(p));
}

}  // namespace

Rational product_measure(const Family& f, const Rational& p) {
  check_probability(p);
  const int n = f.ground_size();
  const Rational q = 1 - p;
  // term[c] = p^c (1-p)^(n-c)
  std::vector<Rational> term(n + 1);
  term[0] = 1;
  for (int c = 1; c <= n; ++c) term[c] = term[c - 1] * p;
  Rational qpow = 1;
  for (int c = n - 1; c >= 0; --c) {
    qpow *= q;
    term[c] *= qpow;
  }
  std::vector<std::uint64_t> count(n + 1, 0);
  for (SetMask m : f.members()) ++count[mask_card(m)];
  Rational total = 0;
  for (int c = 0; c <= n; ++c)
    if (count[c]) total += term[c] * count[c];
  return total;
}

bool sperner_budget_values(const Rational& x, const Rational& y) {
  if (x + y > 1) return false;
  const Rational rest = 1 - x - y;
  return 4 * x * y <= rest * rest;
}

bool sperner_budget_check(const Family& f, const Family& g, const Rational& p) {
  return sperner_budget_values(product_measure(f, p), product_measure(g, p));
}

CorrelationReport correlation_check(const Family& down, const Family& up, const Rational& p) {
  check_probability(p);
  const Rational lhs = product_measure(family_intersection(down, up), p);
  const Rational rhs = product_measure(down, p) * product_measure(up, p);
  return CorrelationReport{lhs <= rhs, is_downset(down), is_upset(up), lhs, rhs};
}

}  // namespace extset
