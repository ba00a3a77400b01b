#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace extset {

// One subset of the ground set [n]: element i is present iff bit i-1 is set.
// Ground sets are capped at one machine word (n <= 30).
using SetMask = std::uint32_t;

inline constexpr int kMaxGroundSize = 30;

// Throws std::invalid_argument unless 1 <= n <= 30; returns n.
int check_ground_size(int n);

constexpr SetMask full_mask(int n) {
  return n <= 0 ? 0u : (SetMask{0xffffffffu} >> (32 - n));
}
constexpr SetMask element_mask(int i) { return SetMask{1} << (i - 1); }
constexpr bool mask_has(SetMask m, int i) { return (m >> (i - 1)) & 1u; }

int mask_card(SetMask m);
std::vector<int> mask_elements(SetMask m);
std::string format_set(SetMask m);  // "{}" or "{1,2,5}"

// Order used everywhere for members and witnesses: cardinality, then value.
bool mask_canonical_less(SetMask a, SetMask b);

// A deduplicated collection of subsets of [n], stored in canonical order.
// Immutable after construction; all operations on families are pure.
class Family {
 public:
  explicit Family(int n);
  Family(int n, std::vector<SetMask> members);

  int ground_size() const { return n_; }
  const std::vector<SetMask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SetMask m) const;

  bool operator==(const Family&) const = default;

 private:
  int n_;
  std::vector<SetMask> members_;
};

// Lexicographic on the canonical member sequence; total order for a fixed n.
bool canonical_less(const Family& a, const Family& b);

// {F \ {i} : i in F}.  The ground size never shrinks: unused elements stay.
Family restrict_contains(const Family& f, int i);
// {F : i not in F}.
Family restrict_avoids(const Family& f, int i);
// {F \ {i} : F meets {i,j} exactly in {i}}.
Family restrict_pair(const Family& f, int i, int j);

// {universe \ F : F in f}; every member must be contained in universe.
Family relative_complement(const Family& f, SetMask universe);

Family family_union(const Family& a, const Family& b);
Family family_difference(const Family& a, const Family& b);
Family family_intersection(const Family& a, const Family& b);

Family power_family(int n);                  // all of 2^[n]
Family all_subsets_le(int n, int max_card);  // {S in 2^[n] : |S| <= max_card}

struct ParseResult {
  Family family;
  std::vector<std::string> warnings;  // duplicate members are dedup + warning
};

// Text format: first significant line "n=<int>", then one set per line,
// "{1,2}" with strictly increasing elements, "{}" for the empty set, '#'
// starts a comment line.  A leading '{' on the first significant character
// switches to the JSON form {"n": int, "sets": [[...], ...]}.
ParseResult parse_family(std::string_view text);

// Canonical text form; parse(serialize(f)).family == f.
std::string serialize_family(const Family& f);

}  // namespace extset
