#pragma once

#include <optional>

#include "extset/family.hpp"

namespace extset {

struct PairWitness {
  SetMask first;
  SetMask second;
};

// Verdict plus, on failure, the lexicographically smallest violating pair in
// canonical member order.  Deterministic regardless of evaluation strategy.
struct CheckResult {
  bool holds;
  std::optional<PairWitness> witness;
};

// |F ∩ F'| >= t for every pair, the diagonal F = F' included.
CheckResult is_t_intersecting(const Family& f, int t);

// |F ∪ F'| <= s for every pair, diagonal included.
CheckResult is_s_union(const Family& f, int s);

// Intersecting with no two members whose union is the full ground set.
// The diagonal cases rule out the empty set and [n] as members.
CheckResult is_iu(const Family& f);

// |F ∩ G| >= t for every F in f, G in g; vacuously true when either is empty.
CheckResult is_cross_t_intersecting(const Family& f, const Family& g, int t);

// No cross pair comparable under inclusion.
CheckResult is_cross_sperner(const Family& f, const Family& g);

bool is_downset(const Family& f);
bool is_upset(const Family& f);

}  // namespace extset
