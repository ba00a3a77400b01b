#include "extset/shifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace extset {

namespace {

void check_pair(ShiftPair s, int n) {
  if (s.i < 1 || s.j < 1 || s.i >= s.j || s.j > n)
    throw std::invalid_argument("invalid shift pair (" + std::to_string(s.i) + "," +
                                std::to_string(s.j) + ") for ground size " + std::to_string(n));
}

std::vector<ShiftPair> sorted_pairs(std::span<const ShiftPair> allowed, int n) {
  std::vector<ShiftPair> ps(allowed.begin(), allowed.end());
  for (ShiftPair s : ps) check_pair(s, n);
  std::sort(ps.begin(), ps.end(), [](ShiftPair a, ShiftPair b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace

std::vector<ShiftPair> all_shift_pairs(int n) {
  check_ground_size(n);
  std::vector<ShiftPair> ps;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) ps.push_back({i, j});
  return ps;
}

Family shift_once(const Family& f, ShiftPair s) {
  check_pair(s, f.ground_size());
  const SetMask bi = element_mask(s.i), bj = element_mask(s.j);
  std::vector<SetMask> out;
  out.reserve(f.size());
  for (SetMask m : f.members()) {
    if ((m & bj) && !(m & bi)) {
      SetMask moved = (m & ~bj) | bi;
      out.push_back(f.contains(moved) ? m : moved);
    } else {
      out.push_back(m);
    }
  }
  return Family(f.ground_size(), std::move(out));
}

bool is_shifted(const Family& f, std::span<const ShiftPair> allowed) {
  for (ShiftPair s : allowed) {
    check_pair(s, f.ground_size());
    const SetMask bi = element_mask(s.i), bj = element_mask(s.j);
    for (SetMask m : f.members()) {
      if ((m & bj) && !(m & bi) && !f.contains((m & ~bj) | bi)) return false;
    }
  }
  return true;
}

ShiftFixpointResult shift_pair_to_fixpoint(Family f, Family g, std::span<const ShiftPair> allowed) {
  if (f.ground_size() != g.ground_size())
    throw std::invalid_argument("shift_pair_to_fixpoint: mismatched ground sizes");
  const auto pairs = sorted_pairs(allowed, f.ground_size());
  std::vector<ShiftPair> log;
  bool moved = true;
  while (moved) {
    moved = false;
    for (ShiftPair s : pairs) {
      Family f2 = shift_once(f, s);
      Family g2 = shift_once(g, s);
      if (f2 != f || g2 != g) {
        f = std::move(f2);
        g = std::move(g2);
        log.push_back(s);
        moved = true;
        break;  // restart the scan
      }
    }
  }
  return ShiftFixpointResult{std::move(f), std::move(g), std::move(log)};
}

}  // namespace extset
