#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extset/family.hpp"
#include "extset/rational.hpp"
#include "extset/separated.hpp"

namespace extset {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SearchBudget {
  int max_universe_bits = 20;     // cap on the 2^d outer loop
  double time_cap_seconds = 600;  // soft cap; expiry marks reports non-exhaustive
  int parallel_chunks = 1;
};

// {G in universe : |G ∩ F| >= t for every F in f} — the inclusion-maximal
// partner; every cross-t-intersecting g for f is contained in it.
Family best_partner(const Family& f, const Family& universe, int t);

struct PairMaxReport {
  Rational optimum = 0;
  bool feasible = false;  // some non-empty pair with non-empty partner exists
  std::optional<Family> witness_f;
  std::optional<Family> witness_g;
  bool exhaustive = true;
  bool swapped_roles = false;  // the smaller universe was iterated
  std::uint64_t subsets_scanned = 0;
};

// Maximizes wf(f) + wg(g) over non-empty cross-t-intersecting pairs with
// f ⊆ universe_f, g ⊆ universe_g, by scanning subsets of the smaller
// universe and pairing each with its inclusion-maximal partner.  The witness
// is the lexicographically smallest (f, best_partner(f)) attaining the
// optimum.  Exact: weights are scaled to a common denominator and summed in
// 64-bit integers (overflow raises).
PairMaxReport exhaustive_pair_max(const Family& universe_f, const Family& universe_g, int t,
                                  const WeightTable& wf, const WeightTable& wg,
                                  const SearchBudget& budget = {});

struct IuAggregate {
  int n = 0;
  std::uint64_t clique_count = 0;
  std::size_t max_size = 0;
  std::optional<Family> max_size_witness;
  std::uint64_t max_sturdiness = 0;
  std::optional<Family> max_sturdiness_witness;
  bool exhaustive = true;
};

// Enumerates all maximal IU-families over [n] as maximal cliques of the
// compatibility graph on 2^[n] \ {∅, [n]} (Bron–Kerbosch with pivoting over
// a degeneracy order).  Each maximal family is streamed to the sink.
IuAggregate iu_maximal_families(int n, const SearchBudget& budget = {},
                                const std::function<void(const Family&)>& sink = {});

// Exhaustive verification of the cross-Sperner measure inequality at one p:
// every family f over [n] is paired with its maximal cross-Sperner partner
// (measure is monotone, so this covers every cross-Sperner pair), and the
// product inequality mu(B)mu(C) <= mu(A)mu(D) is checked over all pairs of
// upsets, which the four-way partition factors through.  n <= 4.
struct T2Report {
  int n = 0;
  Rational p;
  std::uint64_t families_scanned = 0;
  std::uint64_t budget_violations = 0;
  std::uint64_t upset_count = 0;
  std::uint64_t upset_pairs = 0;
  std::uint64_t identity_violations = 0;
};

T2Report t2_exhaustive(int n, const Rational& p);

struct T2RandomReport {
  int n = 0;
  std::uint64_t pairs = 0;
  std::uint64_t budget_violations = 0;
  std::uint64_t identity_violations = 0;
};

// Seeded random cross-Sperner pairs over [n] (n <= 12), checked with the
// exact rational path for every p.
T2RandomReport t2_random_pairs(int n, std::uint64_t count, std::uint64_t seed,
                               std::span<const Rational> ps);

enum class SweepVerdict { pass, equality, expected_counterexample, violation, skipped };
const char* sweep_verdict_name(SweepVerdict v);

struct SweepOutcome {
  std::string target;
  std::string params;
  std::string optimum;
  std::string bound;
  SweepVerdict verdict = SweepVerdict::pass;
  std::optional<Family> witness_f;
  std::optional<Family> witness_g;
  std::string note;
};

struct SweepSpec {
  std::string target;  // t1 | t2 | n1 | t3 | f23
  int n_min = 2, n_max = 3;
  int k_min = 1, k_max = 3;
  int t_min = 1, t_max = 2;
  std::vector<Rational> ps;  // t2; defaults to {1/10,1/4,1/2,3/4,9/10}
  std::uint64_t random_pairs = 0;
  std::uint64_t seed = kDefaultSeed;
  int random_tables = 5;  // n1: random non-increasing tables per instance
  SearchBudget budget;
};

// Batch driver: runs the matching oracle per instance, compares against the
// matching closed form, and emits one outcome per instance.  A strict bound
// violation comes back as SweepVerdict::violation with witnesses.
std::vector<SweepOutcome> extremal_sweep(const SweepSpec& spec);

// Seeded non-increasing integer weight table on [0,k] (used by the n1 sweep
// and property suites).
WeightTable random_weight_table(int k, std::uint64_t seed);

}  // namespace extset
