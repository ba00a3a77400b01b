#pragma once

#include <span>
#include <vector>

#include "extset/family.hpp"

namespace extset {

// Replaces j by i (i < j) in members where the target is vacant.
struct ShiftPair {
  int i;
  int j;
  bool operator==(const ShiftPair&) const = default;
};

// All (i,j) with 1 <= i < j <= n, lexicographic.
std::vector<ShiftPair> all_shift_pairs(int n);

// One application of s_{i,j} to every member; presence tests run against the
// input family.  |result| == |f| and member cardinalities are preserved.
Family shift_once(const Family& f, ShiftPair s);

bool is_shifted(const Family& f, std::span<const ShiftPair> allowed);

struct ShiftFixpointResult {
  Family f;
  Family g;
  std::vector<ShiftPair> log;  // pairs applied, in order
};

// Scans the allowed pairs in lexicographic order and applies the first pair
// that moves either family to BOTH, restarting after every change, until
// both families are shifted.  Pass an empty g for a single-family fixpoint.
ShiftFixpointResult shift_pair_to_fixpoint(Family f, Family g, std::span<const ShiftPair> allowed);

}  // namespace extset
