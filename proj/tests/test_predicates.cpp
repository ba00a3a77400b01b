#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "extset/predicates.hpp"
#include "extset/separated.hpp"
#include "test_util.hpp"

using namespace extset;
using extset::testing::random_family;
using extset::testing::set_of;
using extset::testing::star_family;
using extset::testing::triangle_family;

TEST_CASE("is_t_intersecting: spec instances") {
  CHECK(is_t_intersecting(triangle_family(), 1).holds);
  auto r = is_t_intersecting(Family(2, {set_of({1}), set_of({2})}), 1);
  CHECK(!r.holds);
  CHECK(r.witness->first == set_of({1}));
  CHECK(r.witness->second == set_of({2}));
  CHECK(is_t_intersecting(Family(3, {set_of({1, 2, 3})}), 3).holds);  // diagonal pair
  CHECK(!is_t_intersecting(Family(3, {set_of({1, 2})}), 3).holds);
  CHECK_THROWS_AS(is_t_intersecting(triangle_family(), -1), std::invalid_argument);
}

TEST_CASE("witness is the lexicographically smallest violating pair") {
  auto r = is_t_intersecting(Family(3, {set_of({1}), set_of({2}), set_of({3})}), 1);
  REQUIRE(!r.holds);
  CHECK(r.witness->first == set_of({1}));
  CHECK(r.witness->second == set_of({2}));
}

TEST_CASE("is_s_union: spec instances") {
  CHECK(is_s_union(Family(4, {set_of({1, 2}), set_of({1, 3})}), 3).holds);
  CHECK(!is_s_union(Family(4, {set_of({1, 2}), set_of({3, 4})}), 3).holds);
  CHECK(is_s_union(Family(2, {0}), 0).holds);
}

TEST_CASE("is_iu: spec instances") {
  CHECK(is_iu(Family(4, {set_of({1}), set_of({1, 2}), set_of({1, 3}), set_of({1, 2, 3})})).holds);
  CHECK(!is_iu(Family(4, {set_of({1, 2}), set_of({1, 3, 4})})).holds);  // union is [4]
  CHECK(!is_iu(Family(2, {0})).holds);                                  // empty set member
  CHECK(!is_iu(Family(2, {full_mask(2)})).holds);                       // full set member
  CHECK(is_iu(Family(3)).holds);                                        // vacuous
}

TEST_CASE("is_cross_t_intersecting: spec instances") {
  const SeparatedParams ex(2, 3, 3, 2, 1);
  Family f3 = build_candidate(ex, Candidate::Fa, 3);
  Family g3 = build_candidate(ex, Candidate::Ga, 3);
  CHECK(is_cross_t_intersecting(f3, g3, 1).holds);

  Family f(4, {set_of({1, 2})});
  CHECK(is_cross_t_intersecting(f, Family(4), 1).holds);  // vacuous
  CHECK(!is_cross_t_intersecting(f, Family(4, {set_of({3, 4})}), 1).holds);
  CHECK_THROWS_AS(is_cross_t_intersecting(f, Family(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(is_cross_t_intersecting(f, Family(4), 0), std::invalid_argument);
}

TEST_CASE("is_cross_sperner: spec instances") {
  CHECK(is_cross_sperner(Family(3, {set_of({1, 2})}), Family(3, {set_of({1, 3})})).holds);
  CHECK(!is_cross_sperner(Family(2, {set_of({1})}), Family(2, {set_of({1, 2})})).holds);
  CHECK(is_cross_sperner(Family(3), triangle_family()).holds);  // vacuous
}

TEST_CASE("s-union duality with complement intersections, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const SetMask full = full_mask(n);
    const int member_space = 1 << n;
    const std::uint64_t family_space = std::uint64_t{1} << member_space;
    std::uint64_t mismatches = 0;
    for (std::uint64_t fm = 0; fm < family_space; ++fm) {
      std::vector<SetMask> members;
      for (int s = 0; s < member_space; ++s)
        if ((fm >> s) & 1) members.push_back(static_cast<SetMask>(s));
      Family f(n, std::move(members));
      Family comp = relative_complement(f, full);
      for (int s = 0; s <= n + 1; ++s) {
        const bool lhs = is_s_union(f, s).holds;
        const bool rhs = is_t_intersecting(comp, std::max(0, n - s)).holds;
        if (lhs != rhs) ++mismatches;
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("cross-Sperner bridge: meeting, non-covering pairs become incomparable "
          "after complementing one side, exhaustive |U| <= 4") {
  for (int u = 1; u <= 4; ++u) {
    const SetMask full = full_mask(u);
    for (SetMask a = 0; a <= full; ++a)
      for (SetMask b = 0; b <= full; ++b) {
        if ((a & b) == 0 || (a | b) == full) continue;
        const SetMask bc = full & ~b;
        CHECK(((a & bc) != a && (a & bc) != bc));
        CHECK(is_cross_sperner(Family(u, {a}), Family(u, {bc})).holds);
      }
  }
}

TEST_CASE("downset/upset recognizers against the definition, n <= 4") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Family f = random_family(rng, n, 10);
    bool down = true, up = true;
    for (SetMask m : f.members()) {
      for (SetMask t = 0; t <= full_mask(n); ++t) {
        if ((t & m) == t && !f.contains(t)) down = false;
        if ((t & m) == m && !f.contains(t)) up = false;
      }
    }
    CHECK(is_downset(f) == down);
    CHECK(is_upset(f) == up);
  }
  CHECK(is_downset(Family(3, {0, set_of({1}), set_of({2}), set_of({1, 2})})));
  CHECK(is_upset(Family(2, {full_mask(2)})));
  CHECK(!is_upset(Family(2, {set_of({1})})));
}
