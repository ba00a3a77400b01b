#pragma once

#include <cstdint>

#include "extset/family.hpp"
#include "extset/rational.hpp"

namespace extset {

// Degree and diversity of a family.  diversity == size - max_degree always;
// the same element witnesses both extremes.
struct DegreeStats {
  std::uint64_t max_degree;
  int max_degree_element;  // smallest argmax
  std::uint64_t diversity;
};

DegreeStats degree_stats(const Family& f);

// min over ordered pairs (i,j), i != j, of |{F : i in F, j not in F}|,
// with the lexicographically smallest argmin pair.
struct SturdinessStats {
  std::uint64_t value;
  int i;
  int j;
};

SturdinessStats sturdiness(const Family& f);  // requires ground size >= 2

// Sum over members of p^|F| (1-p)^(n-|F|), exact.  Requires 0 < p < 1.
Rational product_measure(const Family& f, const Rational& p);

// sqrt(x) + sqrt(y) <= 1, decided without radicals:
// (x + y <= 1) and (4xy <= (1 - x - y)^2).
bool sperner_budget_values(const Rational& x, const Rational& y);

// The above applied to x = mu_p(f), y = mu_p(g).  Callers are expected to
// have checked that (f, g) is cross-Sperner; this does not re-verify.
bool sperner_budget_check(const Family& f, const Family& g, const Rational& p);

// mu_p(down ∩ up) <= mu_p(down) * mu_p(up), exact comparison.  Monotonicity
// of the inputs is reported, not enforced.
struct CorrelationReport {
  bool holds;
  bool down_is_downset;
  bool up_is_upset;
  Rational lhs;
  Rational rhs;
};

CorrelationReport correlation_check(const Family& down, const Family& up, const Rational& p);

}  // namespace extset
