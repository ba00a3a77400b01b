#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "extset/params.hpp"
#include "extset/predicates.hpp"
#include "test_util.hpp"

using namespace extset;
using extset::testing::random_family;
using extset::testing::set_of;
using extset::testing::star_family;
using extset::testing::triangle_family;

TEST_CASE("degree_stats: spec instances") {
  auto star = degree_stats(star_family(4, 1));
  CHECK(star.diversity == 0);
  CHECK(star.max_degree == 8);
  CHECK(star.max_degree_element == 1);

  auto tri = degree_stats(triangle_family());
  CHECK(tri.max_degree == 2);
  CHECK(tri.diversity == 1);

  auto empty = degree_stats(Family(3));
  CHECK(empty.max_degree == 0);
  CHECK(empty.diversity == 0);
}

TEST_CASE("sturdiness: spec instances") {
  auto star = sturdiness(star_family(4, 1));
  CHECK(star.value == 0);
  CHECK(star.i == 2);
  CHECK(star.j == 1);

  CHECK(sturdiness(triangle_family()).value == 1);

  std::vector<SetMask> members;
  for (SetMask m = 0; m <= full_mask(4); ++m)
    if (mask_has(m, 1) && !mask_has(m, 4)) members.push_back(m);
  CHECK(sturdiness(Family(4, std::move(members))).value == 0);

  CHECK_THROWS_AS(sturdiness(Family(1, {set_of({1})})), std::invalid_argument);
}

TEST_CASE("diversity identity and sturdiness-diversity inequality") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 400; ++it) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Family f = random_family(rng, n, 24);
    auto d = degree_stats(f);
    CHECK(d.diversity == f.size() - d.max_degree);
    // Restriction-level identity: diversity = min_i |avoids(i)|.
    std::uint64_t min_avoid = f.size();
    for (int i = 1; i <= n; ++i)
      min_avoid = std::min<std::uint64_t>(min_avoid, restrict_avoids(f, i).size());
    CHECK(d.diversity == min_avoid);
    CHECK(sturdiness(f).value <= d.diversity);
  }
}

TEST_CASE("sturdiness equals the minimum over pair restrictions") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Family f = random_family(rng, n, 16);
    std::uint64_t expected = f.size() + 1;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        expected = std::min<std::uint64_t>(expected, restrict_pair(f, i, j).size());
      }
    CHECK(sturdiness(f).value == expected);
  }
}

TEST_CASE("product_measure: spec instances") {
  CHECK(product_measure(power_family(3), Rational(1, 2)) == 1);
  const Rational p(2, 7);
  CHECK(product_measure(Family(5, {0}), p) ==
        Rational(5, 7) * Rational(5, 7) * Rational(5, 7) * Rational(5, 7) * Rational(5, 7));
  CHECK(product_measure(Family(2, {set_of({1})}), Rational(1, 3)) == Rational(2, 9));
  CHECK_THROWS_AS(product_measure(Family(2), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(product_measure(Family(2), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(product_measure(Family(2), Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("normalization over the full power set, n <= 10") {
  const std::vector<Rational> ps = {Rational(1, 10), Rational(1, 4), Rational(1, 2),
                                    Rational(3, 4), Rational(9, 10), Rational(13, 17)};
  for (int n = 1; n <= 10; ++n) {
    Family all = power_family(n);
    for (const Rational& p : ps) CHECK(product_measure(all, p) == 1);
  }
}

TEST_CASE("sperner_budget_values: boundary and spec instances") {
  CHECK(sperner_budget_values(Rational(1, 4), Rational(1, 4)));  // equality case
  CHECK(!sperner_budget_values(Rational(1, 2), Rational(1, 4)));
  CHECK(sperner_budget_values(Rational(0), Rational(1)));
  CHECK(sperner_budget_values(Rational(1), Rational(0)));
  CHECK(!sperner_budget_values(Rational(1), Rational(1, 100)));
  CHECK(sperner_budget_check(Family(2, {set_of({1})}), Family(2, {set_of({2})}), Rational(1, 2)));
}

TEST_CASE("correlation_check: spec instances") {
  // down = 2^[n] has measure 1, so equality holds.
  Family up(3, {set_of({1, 2}), set_of({1, 2, 3}), set_of({1, 3}), set_of({2, 3})});
  auto r = correlation_check(power_family(3), up, Rational(1, 2));
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);
  CHECK(r.down_is_downset);

  auto r2 = correlation_check(Family(2, {0}), Family(2, {full_mask(2)}), Rational(1, 2));
  CHECK(r2.holds);
  CHECK(r2.lhs == 0);
  CHECK(r2.rhs == Rational(1, 16));
  CHECK(r2.down_is_downset);
  CHECK(r2.up_is_upset);

  // Misuse on non-monotone families still reports the raw comparison.
  auto r3 = correlation_check(Family(2, {set_of({1})}), Family(2, {set_of({2})}), Rational(1, 2));
  CHECK(!r3.down_is_downset);
  CHECK(!r3.up_is_upset);
}

namespace {

// All monotone families over [n], filtered by the definition directly.
std::vector<Family> monotone_families(int n, bool downsets) {
  std::vector<Family> out;
  const int member_space = 1 << n;
  for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << member_space); ++fm) {
    std::vector<SetMask> members;
    for (int s = 0; s < member_space; ++s)
      if ((fm >> s) & 1) members.push_back(static_cast<SetMask>(s));
    bool ok = true;
    for (SetMask m : members) {
      for (SetMask t = 0; ok && t < static_cast<SetMask>(member_space); ++t) {
        const bool related = downsets ? (t & m) == t : (t & m) == m;
        if (related && !((fm >> t) & 1)) ok = false;
      }
    }
    if (ok) out.push_back(Family(n, std::move(members)));
  }
  return out;
}

}  // namespace

TEST_CASE("correlation inequality holds for every downset/upset pair, n <= 3") {
  const std::vector<Rational> ps = {Rational(1, 3), Rational(1, 2), Rational(7, 9)};
  for (int n = 1; n <= 3; ++n) {
    auto downs = monotone_families(n, true);
    auto ups = monotone_families(n, false);
    // Counts match the number of monotone families: 3, 6, 20.
    const std::size_t expected = n == 1 ? 3 : (n == 2 ? 6 : 20);
    CHECK(downs.size() == expected);
    CHECK(ups.size() == expected);
    std::uint64_t failures = 0;
    for (const Family& d : downs)
      for (const Family& u : ups)
        for (const Rational& p : ps) {
          auto r = correlation_check(d, u, p);
          if (!r.holds || !r.down_is_downset || !r.up_is_upset) ++failures;
        }
    CHECK(failures == 0);
  }
}
