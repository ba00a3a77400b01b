#include "extset/predicates.hpp"

#include <bit>
#include <stdexcept>

namespace extset {

namespace {

void check_same_ground(const Family& f, const Family& g, const char* who) {
  if (f.ground_size() != g.ground_size())
    throw std::invalid_argument(std::string(who) + ": mismatched ground sizes");
}

}  // namespace

CheckResult is_t_intersecting(const Family& f, int t) {
  if (t < 0) throw std::invalid_argument("is_t_intersecting: t must be >= 0");
  const auto& ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a; b < ms.size(); ++b)
      if (std::popcount(ms[a] & ms[b]) < t) return {false, PairWitness{ms[a], ms[b]}};
  return {true, std::nullopt};
}

CheckResult is_s_union(const Family& f, int s) {
  if (s < 0) throw std::invalid_argument("is_s_union: s must be >= 0");
  const auto& ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a; b < ms.size(); ++b)
      if (std::popcount(ms[a] | ms[b]) > s) return {false, PairWitness{ms[a], ms[b]}};
  return {true, std::nullopt};
}

CheckResult is_iu(const Family& f) {
  const SetMask full = full_mask(f.ground_size());
  const auto& ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a; b < ms.size(); ++b) {
      if ((ms[a] & ms[b]) == 0) return {false, PairWitness{ms[a], ms[b]}};
      if ((ms[a] | ms[b]) == full) return {false, PairWitness{ms[a], ms[b]}};
    }
  return {true, std::nullopt};
}

CheckResult is_cross_t_intersecting(const Family& f, const Family& g, int t) {
  check_same_ground(f, g, "is_cross_t_intersecting");
  if (t < 1) throw std::invalid_argument("is_cross_t_intersecting: t must be >= 1");
  for (SetMask a : f.members())
    for (SetMask b : g.members())
      if (std::popcount(a & b) < t) return {false, PairWitness{a, b}};
  return {true, std::nullopt};
}

CheckResult is_cross_sperner(const Family& f, const Family& g) {
  check_same_ground(f, g, "is_cross_sperner");
  for (SetMask a : f.members())
    for (SetMask b : g.members())
      if ((a & b) == a || (a & b) == b) return {false, PairWitness{a, b}};
  return {true, std::nullopt};
}

bool is_downset(const Family& f) {
  for (SetMask m : f.members()) {
    SetMask rest = m;
    while (rest) {
      SetMask bit = rest & (~rest + 1);
      if (!f.contains(m & ~bit)) return false;
      rest &= rest - 1;
    }
  }
  return true;
}

bool is_upset(const Family& f) {
  const SetMask full = full_mask(f.ground_size());
  for (SetMask m : f.members()) {
    SetMask rest = full & ~m;
    while (rest) {
      SetMask bit = rest & (~rest + 1);
      if (!f.contains(m | bit)) return false;
      rest &= rest - 1;
    }
  }
  return true;
}

}  // namespace extset
