#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "extset/nip.hpp"
#include "extset/predicates.hpp"
#include "extset/search.hpp"
#include "extset/separated.hpp"
#include "extset/shifting.hpp"
#include "test_util.hpp"

using namespace extset;
using extset::testing::random_family;
using extset::testing::set_of;

namespace {

std::int64_t element_sum(const Family& f) {
  std::int64_t total = 0;
  for (SetMask m : f.members())
    for (int e : mask_elements(m)) total += e;
  return total;
}

// Random cross-t-intersecting pair: a family plus a random subset of its
// maximal partner; resamples when the partner is empty.
std::pair<Family, Family> random_cross_pair(std::mt19937_64& rng, int n, int t) {
  while (true) {
    Family f = random_family(rng, n, 6);
    if (f.empty()) continue;
    Family partner = best_partner(f, power_family(n), t);
    if (partner.empty()) continue;
    std::vector<SetMask> gm;
    const int gsize = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < gsize; ++i)
      gm.push_back(partner.members()[rng() % partner.size()]);
    return {std::move(f), Family(n, std::move(gm))};
  }
}

}  // namespace

TEST_CASE("shift_once: spec instances") {
  CHECK(shift_once(Family(3, {set_of({2, 3})}), {1, 2}) == Family(3, {set_of({1, 3})}));
  Family both(3, {set_of({2, 3}), set_of({1, 3})});
  CHECK(shift_once(both, {1, 2}) == both);  // target already present
  Family f12(3, {set_of({1, 2})});
  CHECK(shift_once(f12, {1, 2}) == f12);  // i already in the member
  CHECK_THROWS_AS(shift_once(f12, ShiftPair{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(shift_once(f12, ShiftPair{1, 4}), std::invalid_argument);
}

TEST_CASE("is_shifted: spec instances") {
  auto pairs3 = all_shift_pairs(3);
  CHECK(is_shifted(Family(3, {set_of({1}), set_of({1, 2})}), pairs3));
  auto pairs2 = all_shift_pairs(2);
  CHECK(!is_shifted(Family(2, {set_of({2})}), pairs2));
  CHECK(is_shifted(Family(2, {set_of({2})}), std::span<const ShiftPair>{}));  // vacuous
}

TEST_CASE("fixpoint: spec instances") {
  auto pairs = all_shift_pairs(3);
  Family sf(3, {set_of({1}), set_of({1, 2})});
  auto idr = shift_pair_to_fixpoint(sf, sf, pairs);
  CHECK(idr.f == sf);
  CHECK(idr.g == sf);
  CHECK(idr.log.empty());

  auto r = shift_pair_to_fixpoint(Family(3, {set_of({2})}), Family(3, {set_of({2, 3})}), pairs);
  CHECK(r.f == Family(3, {set_of({1})}));
  CHECK(r.g == Family(3, {set_of({1, 2})}));
  CHECK(is_cross_t_intersecting(r.f, r.g, 1).holds);
}

TEST_CASE("fixpoint: size and cardinality preservation, shiftedness, potential decrease") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 4);
    auto pairs = all_shift_pairs(n);
    Family f = random_family(rng, n, 10);
    Family g = random_family(rng, n, 10);
    auto r = shift_pair_to_fixpoint(f, g, pairs);
    CHECK(r.f.size() == f.size());
    CHECK(r.g.size() == g.size());
    CHECK(is_shifted(r.f, pairs));
    CHECK(is_shifted(r.g, pairs));

    // Member cardinalities survive as a multiset.
    auto cards = [](const Family& fam) {
      std::vector<int> cs;
      for (SetMask m : fam.members()) cs.push_back(mask_card(m));
      std::sort(cs.begin(), cs.end());
      return cs;
    };
    CHECK(cards(r.f) == cards(f));
    CHECK(cards(r.g) == cards(g));

    // Replaying the log: every applied pair strictly lowers the combined
    // element-sum potential, which is why the loop terminates.
    Family cf = f, cg = g;
    std::int64_t potential = element_sum(cf) + element_sum(cg);
    for (ShiftPair s : r.log) {
      cf = shift_once(cf, s);
      cg = shift_once(cg, s);
      const std::int64_t next = element_sum(cf) + element_sum(cg);
      CHECK(next < potential);
      potential = next;
    }
    CHECK(cf == r.f);
    CHECK(cg == r.g);
  }
}

TEST_CASE("single-family fixpoint via empty partner") {
  auto pairs = all_shift_pairs(4);
  Family f(4, {set_of({2, 4}), set_of({3, 4})});
  auto r = shift_pair_to_fixpoint(f, Family(4), pairs);
  CHECK(is_shifted(r.f, pairs));
  CHECK(r.g.empty());
  CHECK(r.f.size() == f.size());
}

TEST_CASE("cross-t preservation and NIP non-increase on random pairs") {
  std::mt19937_64 rng(43);
  for (int t : {1, 2}) {
    for (int it = 0; it < 200; ++it) {
      const int n = std::max(t, 2) + static_cast<int>(rng() % 3);
      auto [f, g] = random_cross_pair(rng, n, t);
      const int a_before = *max_nip(f, g, t).max_nip;
      auto pairs = all_shift_pairs(n);

      // Single applications (the lemma-level statement) ...
      for (ShiftPair s : pairs) {
        Family sf = shift_once(f, s);
        Family sg = shift_once(g, s);
        CHECK(is_cross_t_intersecting(sf, sg, t).holds);
        CHECK(*max_nip(sf, sg, t).max_nip <= a_before);
      }

      // ... and the full fixpoint.
      auto r = shift_pair_to_fixpoint(f, g, pairs);
      CHECK(is_cross_t_intersecting(r.f, r.g, t).holds);
      CHECK(*max_nip(r.f, r.g, t).max_nip <= a_before);
    }
  }
}

TEST_CASE("canonical K and S constructions are shifted") {
  for (int k = 2; k <= 6; ++k) {
    auto pairs = all_shift_pairs(k);
    for (int l = 1; l <= k; ++l)
      for (int a = 1; a <= k; ++a) {
        CHECK(is_shifted(build_S(k, a, l), pairs));
        for (int t = 1; t <= a; ++t) CHECK(is_shifted(build_K(k, a, l, t), pairs));
      }
  }
}

TEST_CASE("separated variant: block pairs only touch within-block elements") {
  BlockStructure bs(2, 3);
  auto pairs = block_shift_pairs(bs);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == ShiftPair{1, 2});
  CHECK(pairs[1] == ShiftPair{3, 4});
  CHECK(pairs[2] == ShiftPair{5, 6});

  // {2,3} can move to {1,3} via the block pair (1,2) but never to {2,4}'s
  // cross-block variants.
  Family f(6, {set_of({2, 3})});
  auto r = shift_pair_to_fixpoint(f, Family(6), pairs);
  CHECK(r.f == Family(6, {set_of({1, 3})}));
}
