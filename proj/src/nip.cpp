#include "extset/nip.hpp"

#include <bit>

#include "extset/predicates.hpp"

namespace extset {

namespace {

// t-th smallest element of the mask; 0 when |m| < t.
int tth_smallest(SetMask m, int t) {
  int seen = 0;
  while (m) {
    int e = std::countr_zero(m) + 1;
    if (++seen == t) return e;
    m &= m - 1;
  }
  return 0;
}

void check_tables(const WeightTable& w1, const WeightTable& w2, const char* who) {
  if (!w1.non_increasing() || !w2.non_increasing())
    throw std::invalid_argument(std::string(who) + ": weight tables must be non-increasing");
}

}  // namespace

NipReport max_nip(const Family& f, const Family& g, int t) {
  if (t < 1) throw std::invalid_argument("max_nip: t must be >= 1");
  if (f.empty() || g.empty()) throw std::invalid_argument("max_nip: families must be non-empty");
  const auto cross = is_cross_t_intersecting(f, g, t);
  if (!cross.holds)
    throw std::invalid_argument("max_nip: families are not cross " + std::to_string(t) +
                                "-intersecting (witness " + format_set(cross.witness->first) +
                                ", " + format_set(cross.witness->second) + ")");

  int a = 0;
  for (SetMask fm : f.members())
    for (SetMask gm : g.members()) a = std::max(a, tth_smallest(fm & gm, t));

  std::vector<SetMask> fw, gw;
  for (SetMask fm : f.members())
    for (SetMask gm : g.members())
      if (tth_smallest(fm & gm, t) == a) {
        fw.push_back(fm);
        gw.push_back(gm);
      }
  return NipReport{a, Family(f.ground_size(), std::move(fw)), Family(g.ground_size(), std::move(gw))};
}

CompressResult compress_step(const Family& f, const Family& g, int t, const WeightTable& w1,
                             const WeightTable& w2) {
  check_tables(w1, w2, "compress_step");
  const NipReport rep = max_nip(f, g, t);
  if (!rep.max_nip.has_value())
    throw CompressPrecondition(CompressPrecondition::Kind::no_nip,
                               "compress_step: no necessary intersection point");
  const int a = *rep.max_nip;
  if (a == t)
    throw CompressPrecondition(CompressPrecondition::Kind::a_equals_t,
                               "compress_step: terminal, maximal point equals t");
  if (rep.f_witnesses.size() == f.size())
    throw CompressPrecondition(CompressPrecondition::Kind::f_all_witnesses,
                               "compress_step: terminal, f equals its witness family");
  if (rep.g_witnesses.size() == g.size())
    throw CompressPrecondition(CompressPrecondition::Kind::g_all_witnesses,
                               "compress_step: terminal, g equals its witness family");

  const Rational weight_before = family_weight(f, w1) + family_weight(g, w2);
  const SetMask ba = element_mask(a);

  const Rational wfa = family_weight(rep.f_witnesses, w1);
  const Rational wga = family_weight(rep.g_witnesses, w2);

  Family nf(f.ground_size());
  Family ng(g.ground_size());
  CompressBranch branch;
  if (wfa >= wga) {
    std::vector<SetMask> add;
    for (SetMask m : rep.f_witnesses.members()) add.push_back(m & ~ba);
    nf = family_union(f, Family(f.ground_size(), std::move(add)));
    ng = family_difference(g, rep.g_witnesses);
    branch = CompressBranch::grow_f;
  } else {
    std::vector<SetMask> add;
    for (SetMask m : rep.g_witnesses.members()) add.push_back(m & ~ba);
    nf = family_difference(f, rep.f_witnesses);
    ng = family_union(g, Family(g.ground_size(), std::move(add)));
    branch = CompressBranch::grow_g;
  }
  const Rational weight_after = family_weight(nf, w1) + family_weight(ng, w2);
  return CompressResult{std::move(nf), std::move(ng), branch, a, weight_before, weight_after};
}

const char* terminal_kind_name(TerminalKind k) {
  switch (k) {
    case TerminalKind::a_equals_t:
      return "a=t-star";
    case TerminalKind::f_star:
      return "(S,K)";
    case TerminalKind::g_star:
      return "(K,S)";
  }
  return "?";
}

TerminalResult compress_to_terminal(Family f, Family g, int t, const WeightTable& w1,
                                    const WeightTable& w2, std::span<const ShiftPair> allowed) {
  check_tables(w1, w2, "compress_to_terminal");
  const int k = f.ground_size();
  const std::size_t step_cap = 10000 / static_cast<std::size_t>(std::max(1, k));

  TerminalResult result{Family(k), Family(g.ground_size()), TerminalKind::a_equals_t, t,
                        family_weight(f, w1) + family_weight(g, w2), 0, {}};

  while (true) {
    if (result.trace.size() > step_cap)
      throw std::logic_error("compress_to_terminal: step cap exceeded");

    const int a_before = *max_nip(f, g, t).max_nip;
    auto shifted = shift_pair_to_fixpoint(std::move(f), std::move(g), allowed);
    f = std::move(shifted.f);
    g = std::move(shifted.g);
    const NipReport rep = max_nip(f, g, t);
    const int a = *rep.max_nip;
    if (!shifted.log.empty()) {
      const Rational w = family_weight(f, w1) + family_weight(g, w2);
      result.trace.push_back(TraceStep{TraceStep::Kind::shift, std::move(shifted.log),
                                       std::nullopt, a_before, a, w, w});
    }

    TerminalKind kind;
    if (a == t)
      kind = TerminalKind::a_equals_t;
    else if (rep.f_witnesses.size() == f.size())
      kind = TerminalKind::f_star;
    else if (rep.g_witnesses.size() == g.size())
      kind = TerminalKind::g_star;
    else {
      auto step = compress_step(f, g, t, w1, w2);
      result.trace.push_back(TraceStep{TraceStep::Kind::compress, {}, step.branch, a,
                                       *max_nip(step.f, step.g, t).max_nip, step.weight_before,
                                       step.weight_after});
      f = std::move(step.f);
      g = std::move(step.g);
      continue;
    }

    result.f = std::move(f);
    result.g = std::move(g);
    result.kind = kind;
    result.a = a;
    result.weight_final = family_weight(result.f, w1) + family_weight(result.g, w2);
    return result;
  }
}

}  // namespace extset
