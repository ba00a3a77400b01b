#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "extset/family.hpp"
#include "extset/separated.hpp"
#include "extset/shifting.hpp"

namespace extset {

// a is a necessary intersection point of (f,g) when some cross pair (F,G)
// has |[a] ∩ F ∩ G| = t and a in F ∩ G; equivalently a is the t-th smallest
// element of F ∩ G.  For non-empty cross-t-intersecting inputs one always
// exists.
struct NipReport {
  std::optional<int> max_nip;
  Family f_witnesses;  // F^a: members of f realizing the maximal point
  Family g_witnesses;  // G^a
};

// Requires both families non-empty and cross-t-intersecting (verified).
NipReport max_nip(const Family& f, const Family& g, int t);

class CompressPrecondition : public std::invalid_argument {
 public:
  enum class Kind { no_nip, a_equals_t, f_all_witnesses, g_all_witnesses };
  CompressPrecondition(Kind kind, const std::string& msg)
      : std::invalid_argument(msg), kind(kind) {}
  Kind kind;
};

enum class CompressBranch { grow_f, grow_g };

struct CompressResult {
  Family f;
  Family g;
  CompressBranch branch;
  int a;  // the maximal necessary intersection point that was removed
  Rational weight_before;
  Rational weight_after;
};

// One step of the weight-preserving compression: with a the maximal
// necessary intersection point, either (f ∪ {F\{a} : F in F^a}, g \ G^a)
// when w1(F^a) >= w2(G^a), or the mirror image.  Requires a >= t+1 and both
// f \ F^a and g \ G^a non-empty; each violated precondition raises a
// distinct CompressPrecondition.  Weights must be non-increasing.
CompressResult compress_step(const Family& f, const Family& g, int t,
                             const WeightTable& w1, const WeightTable& w2);

enum class TerminalKind { a_equals_t, f_star, g_star };
const char* terminal_kind_name(TerminalKind k);  // "a=t-star", "(S,K)", "(K,S)"

struct TraceStep {
  enum class Kind { shift, compress } kind;
  std::vector<ShiftPair> shifts;               // for shift steps
  std::optional<CompressBranch> branch;        // for compress steps
  int a_before;
  int a_after;
  Rational weight_before;
  Rational weight_after;
};

struct TerminalResult {
  Family f;
  Family g;
  TerminalKind kind;
  int a;
  Rational weight_initial;
  Rational weight_final;
  std::vector<TraceStep> trace;
};

// Alternates shift fixpoints with compress steps until the maximal necessary
// intersection point equals t or one side coincides with its witness family.
// The point strictly decreases across compress steps and never increases
// across shifts, so this terminates; a step cap guards against bugs.
TerminalResult compress_to_terminal(Family f, Family g, int t, const WeightTable& w1,
                                    const WeightTable& w2, std::span<const ShiftPair> allowed);

}  // namespace extset
