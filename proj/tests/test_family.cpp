#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "extset/family.hpp"
#include "test_util.hpp"

using namespace extset;
using extset::testing::random_family;
using extset::testing::set_of;
using extset::testing::star_family;
using extset::testing::triangle_family;

TEST_CASE("parse: basic text form") {
  auto r = parse_family("n=3\n{1,2}\n{1,3}");
  CHECK(r.family == Family(3, {set_of({1, 2}), set_of({1, 3})}));
  CHECK(r.warnings.empty());
}

TEST_CASE("parse: empty set literal") {
  auto r = parse_family("n=3\n{}");
  CHECK(r.family == Family(3, {0}));
}

TEST_CASE("parse: element out of range") {
  CHECK_THROWS_AS(parse_family("n=2\n{3}"), std::invalid_argument);
}

TEST_CASE("parse: comments, blank lines, spacing") {
  auto r = parse_family("# header\n\n n = 4 \n# mid\n{2, 4}\n");
  CHECK(r.family == Family(4, {set_of({2, 4})}));
}

TEST_CASE("parse: duplicate set is a warning, not an error") {
  auto r = parse_family("n=3\n{1}\n{1}\n");
  CHECK(r.family.size() == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("parse: malformed input") {
  CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("n=3\n{2,1}"), std::invalid_argument);  // not increasing
  CHECK_THROWS_AS(parse_family("n=3\n{1,1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("n=3\n1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("n=3\n{1,}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("n=0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("n=31\n"), std::invalid_argument);
}

TEST_CASE("parse: JSON alternative") {
  auto r = parse_family(R"({"n": 3, "sets": [[1,2],[3]]})");
  CHECK(r.family == Family(3, {set_of({1, 2}), set_of({3})}));
  CHECK_THROWS_AS(parse_family(R"({"n": 3, "sets": [[2,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(R"({"n": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family(R"({"n": 2, "sets": [[3]]})"), std::invalid_argument);
}

TEST_CASE("round-trip both ways") {
  const std::string canonical = "n=4\n{2}\n{1,3}\n{1,2,4}\n";
  CHECK(serialize_family(parse_family(canonical).family) == canonical);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Family f = random_family(rng, 1 + static_cast<int>(rng() % 8), 12);
    CHECK(parse_family(serialize_family(f)).family == f);
  }
}

TEST_CASE("members are stored canonically") {
  Family f(4, {set_of({1, 2, 3}), set_of({4}), set_of({1, 2}), set_of({3})});
  REQUIRE(f.size() == 4);
  CHECK(f.members()[0] == set_of({3}));
  CHECK(f.members()[1] == set_of({4}));
  CHECK(f.members()[2] == set_of({1, 2}));
  CHECK(f.members()[3] == set_of({1, 2, 3}));
}

TEST_CASE("restrict: spec instances") {
  Family tri = triangle_family();
  CHECK(restrict_pair(tri, 1, 2) == Family(3, {set_of({3})}));
  CHECK(restrict_avoids(tri, 1) == Family(3, {set_of({2, 3})}));
  CHECK(restrict_pair(star_family(4, 1), 2, 1) == Family(4));
}

TEST_CASE("restrict: contains/avoids partition the family") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Family f = random_family(rng, n, 20);
    for (int i = 1; i <= n; ++i) {
      CHECK(restrict_contains(f, i).size() + restrict_avoids(f, i).size() == f.size());
    }
  }
}

TEST_CASE("restrict: pair result is contained in the contains-restriction") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Family f = random_family(rng, n, 16);
    const int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    if (j == i) j = (j % n) + 1;
    Family sub = restrict_pair(f, i, j);
    Family super = restrict_contains(f, i);
    for (SetMask m : sub.members()) CHECK(super.contains(m));
  }
}

TEST_CASE("restrict: argument validation") {
  Family tri = triangle_family();
  CHECK_THROWS_AS(restrict_contains(tri, 0), std::invalid_argument);
  CHECK_THROWS_AS(restrict_avoids(tri, 4), std::invalid_argument);
  CHECK_THROWS_AS(restrict_pair(tri, 2, 2), std::invalid_argument);
}

TEST_CASE("relative_complement: spec instances") {
  CHECK(relative_complement(Family(4, {set_of({3})}), set_of({3, 4})) ==
        Family(4, {set_of({4})}));
  const SetMask u = full_mask(4);
  CHECK(relative_complement(Family(4, {0}), u) == Family(4, {u}));
  CHECK_THROWS_AS(relative_complement(Family(4, {set_of({1})}), set_of({3, 4})),
                  std::invalid_argument);
}

TEST_CASE("relative_complement is an involution preserving member count") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const SetMask u = full_mask(n);
    Family f = random_family(rng, n, 20);
    Family c = relative_complement(f, u);
    CHECK(c.size() == f.size());
    CHECK(relative_complement(c, u) == f);
  }
}

TEST_CASE("canonical_less is a strict total order on distinct families") {
  Family a(3, {set_of({1})});
  Family b(3, {set_of({2})});
  Family c(3, {set_of({1}), set_of({2})});
  CHECK(canonical_less(a, b));
  CHECK(canonical_less(a, c));
  CHECK(!canonical_less(b, a));
  CHECK(!canonical_less(a, a));
}

TEST_CASE("set algebra helpers") {
  Family a(3, {set_of({1}), set_of({2})});
  Family b(3, {set_of({2}), set_of({3})});
  CHECK(family_union(a, b).size() == 3);
  CHECK(family_intersection(a, b) == Family(3, {set_of({2})}));
  CHECK(family_difference(a, b) == Family(3, {set_of({1})}));
  CHECK(power_family(3).size() == 8);
  CHECK(all_subsets_le(4, 2).size() == 1 + 4 + 6);
}
