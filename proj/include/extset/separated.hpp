#pragma once

#include <utility>
#include <vector>

#include "extset/family.hpp"
#include "extset/rational.hpp"
#include "extset/shifting.hpp"

namespace extset {

// The ground set [n*k] split into k consecutive blocks of size n,
// X_i = [(i-1)n+1, in], with block minimum v_i = (i-1)n+1.
struct BlockStructure {
  int block_size;   // n
  int block_count;  // k

  BlockStructure(int n, int k);

  int ground_size() const { return block_size * block_count; }
  SetMask block_mask(int i) const;  // X_i, 1-based
  int minimum(int i) const;         // v_i
};

// Shift pairs (i,j) with i < j in the same block, lexicographic.
std::vector<ShiftPair> block_shift_pairs(const BlockStructure& bs);

struct SeparatedParams {
  int n;
  int k;
  int l;   // ℓ
  int lp;  // ℓ'
  int t;

  // Enforces k >= l >= lp >= t >= 1, n >= 1, n*k <= 30.
  SeparatedParams(int n, int k, int l, int lp, int t);

  BlockStructure blocks() const { return BlockStructure(n, k); }
};

// All l-subsets of [n*k] meeting each block at most once;
// |result| = C(k,l) * n^l.
Family enumerate_H(const BlockStructure& bs, int l);

// {i : h ∩ X_i = {v_i}}, as a mask over [k].  Rejects h meeting a block twice.
SetMask a_profile(SetMask h, const BlockStructure& bs);

// The deduplicated image of a_profile over a family; result lives over [k].
Family a_family(const Family& f, const BlockStructure& bs);

enum class Candidate { F0, G0, Fa, Ga };

// The candidate extremal families:
//   F0    = {F in H(n,k,l)  : |F ∩ {v_1..v_lp}| >= t}
//   G0    = {{v_1..v_lp}}
//   Fa(a) = {F in H(n,k,l)  : {v_1..v_a} ⊆ F}
//   Ga(a) = {G in H(n,k,lp) : |G ∩ {v_1..v_a}| >= t}
Family build_candidate(const SeparatedParams& p, Candidate which, int a = 0);

// K_k(a,l,t) = {K ⊆ [k] : |K| <= l, |K ∩ [a]| >= t}
Family build_K(int k, int a, int l, int t);
// S_k(a,l) = {S ⊆ [k] : |S| <= l, [a] ⊆ S}
Family build_S(int k, int a, int l);

// Nonnegative weights indexed by set size.  Monotonicity is a property the
// callers that need it check via non_increasing(); the separated tables can
// fail it at n = 1.
class WeightTable {
 public:
  explicit WeightTable(std::vector<Rational> values);
  static WeightTable unit(int max_size);

  const Rational& at(int j) const;
  int max_size() const { return static_cast<int>(values_.size()) - 1; }
  bool non_increasing() const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

// omega_1(j) = C(k-j, l-j)  (n-1)^(l-j)   (0 for j > l)
// omega_2(j) = C(k-j, lp-j) (n-1)^(lp-j)  (0 for j > lp),  j in [0,k].
std::pair<WeightTable, WeightTable> weight_tables(const SeparatedParams& p);

// Sum over members of w(|member|).
Rational family_weight(const Family& f, const WeightTable& w);

struct T3Report {
  SeparatedParams params;
  std::vector<BigInt> f_values;  // f(a) for a = t..lp
  std::vector<BigInt> g_values;  // g(a) for a = t..l
  BigInt bound;                  // max{f(lp), max_{a in [lp+1,l]} g(a)}
  char argmax_side;              // 'f' or 'g'
  int argmax_a;
  bool identities_checked;       // candidate enumeration cross-check ran (nk <= 16)
};

// Requires n >= 2 (at n = 1 the weight tables can fail monotonicity and the
// bound argument breaks; such inputs are rejected).
T3Report t3_bound(const SeparatedParams& p);

// Sum_{j in [l]} (C(k,j) - C(k-lp,j)) C(k-j,l-j) (n-1)^(l-j) + 1.
// Evaluated for any n >= 2, k >= l >= lp >= 2; no hypothesis on n vs l is
// enforced, so the value can sit below the true optimum.
BigInt f23_sum(int n, int k, int l, int lp);

struct N1Bound {
  Rational value;
  char side;  // 'f' for (K,S), 'g' for (S,K)
  int a;
};

// max over a of w1(K_k(a,l,t)) + w2(S_k(a,lp)) for a in [t,lp] and of
// w1(S_k(a,l)) + w2(K_k(a,lp,t)) for a in [t,l].
N1Bound n1_candidate_max(int k, int l, int lp, int t, const WeightTable& w1,
                         const WeightTable& w2);

}  // namespace extset
