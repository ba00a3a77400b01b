#include "extset/json_io.hpp"

namespace extset {

using nlohmann::json;

json set_to_json(SetMask m) { return json(mask_elements(m)); }

void to_json(json& j, const Family& f) {
  json sets = json::array();
  for (SetMask m : f.members()) sets.push_back(set_to_json(m));
  j = json{{"n", f.ground_size()}, {"sets", std::move(sets)}};
}

void to_json(json& j, const ShiftPair& s) { j = json::array({s.i, s.j}); }

void to_json(json& j, const CheckResult& r) {
  j = json{{"holds", r.holds}};
  if (r.witness)
    j["witness"] = json{{"first", set_to_json(r.witness->first)},
                        {"second", set_to_json(r.witness->second)}};
}

void to_json(json& j, const CorrelationReport& r) {
  j = json{{"holds", r.holds},
           {"down_is_downset", r.down_is_downset},
           {"up_is_upset", r.up_is_upset},
           {"lhs", rational_to_string(r.lhs)},
           {"rhs", rational_to_string(r.rhs)}};
}

void to_json(json& j, const WeightTable& w) {
  json values = json::array();
  for (const Rational& v : w.values()) values.push_back(rational_to_string(v));
  j = json{{"values", std::move(values)}, {"non_increasing", w.non_increasing()}};
}

void to_json(json& j, const T3Report& r) {
  json fv = json::array(), gv = json::array();
  for (std::size_t i = 0; i < r.f_values.size(); ++i)
    fv.push_back(json{{"a", r.params.t + static_cast<int>(i)}, {"value", r.f_values[i].str()}});
  for (std::size_t i = 0; i < r.g_values.size(); ++i)
    gv.push_back(json{{"a", r.params.t + static_cast<int>(i)}, {"value", r.g_values[i].str()}});
  j = json{{"params",
            {{"n", r.params.n}, {"k", r.params.k}, {"l", r.params.l},
             {"lp", r.params.lp}, {"t", r.params.t}}},
           {"f", std::move(fv)},
           {"g", std::move(gv)},
           {"bound", r.bound.str()},
           {"argmax", {{"side", std::string(1, r.argmax_side)}, {"a", r.argmax_a}}},
           {"identities_checked", r.identities_checked}};
}

void to_json(json& j, const NipReport& r) {
  j = json{{"f_witnesses", r.f_witnesses}, {"g_witnesses", r.g_witnesses}};
  if (r.max_nip)
    j["max_nip"] = *r.max_nip;
  else
    j["max_nip"] = nullptr;
}

void to_json(json& j, const CompressResult& r) {
  j = json{{"f", r.f},
           {"g", r.g},
           {"branch", r.branch == CompressBranch::grow_f ? "f_plus_g_minus" : "f_minus_g_plus"},
           {"a", r.a},
           {"weight_before", rational_to_string(r.weight_before)},
           {"weight_after", rational_to_string(r.weight_after)}};
}

void to_json(json& j, const TraceStep& s) {
  j = json{{"kind", s.kind == TraceStep::Kind::shift ? "shift" : "compress"},
           {"a_before", s.a_before},
           {"a_after", s.a_after},
           {"weight_before", rational_to_string(s.weight_before)},
           {"weight_after", rational_to_string(s.weight_after)}};
  if (s.kind == TraceStep::Kind::shift) {
    j["detail"] = json{{"pairs", s.shifts}};
  } else {
    j["detail"] = json{{"branch", s.branch == CompressBranch::grow_f ? "f_plus_g_minus"
                                                                     : "f_minus_g_plus"}};
  }
}

void to_json(json& j, const TerminalResult& r) {
  j = json{{"f", r.f},
           {"g", r.g},
           {"terminal", terminal_kind_name(r.kind)},
           {"a", r.a},
           {"weight_initial", rational_to_string(r.weight_initial)},
           {"weight_final", rational_to_string(r.weight_final)},
           {"trace", r.trace}};
}

void to_json(json& j, const PairMaxReport& r) {
  j = json{{"optimum", rational_to_string(r.optimum)},
           {"feasible", r.feasible},
           {"exhaustive", r.exhaustive},
           {"swapped_roles", r.swapped_roles},
           {"subsets_scanned", r.subsets_scanned}};
  if (r.witness_f) j["witness_f"] = *r.witness_f;
  if (r.witness_g) j["witness_g"] = *r.witness_g;
}

void to_json(json& j, const IuAggregate& a) {
  j = json{{"n", a.n},
           {"clique_count", a.clique_count},
           {"max_size", a.max_size},
           {"max_sturdiness", a.max_sturdiness},
           {"exhaustive", a.exhaustive}};
  if (a.max_size_witness) j["max_size_witness"] = *a.max_size_witness;
  if (a.max_sturdiness_witness) j["max_sturdiness_witness"] = *a.max_sturdiness_witness;
}

void to_json(json& j, const T2Report& r) {
  j = json{{"n", r.n},
           {"p", rational_to_string(r.p)},
           {"families_scanned", r.families_scanned},
           {"budget_violations", r.budget_violations},
           {"upset_count", r.upset_count},
           {"upset_pairs", r.upset_pairs},
           {"identity_violations", r.identity_violations}};
}

void to_json(json& j, const T2RandomReport& r) {
  j = json{{"n", r.n},
           {"pairs", r.pairs},
           {"budget_violations", r.budget_violations},
           {"identity_violations", r.identity_violations}};
}

void to_json(json& j, const SweepOutcome& o) {
  j = json{{"target", o.target},
           {"params", o.params},
           {"optimum", o.optimum},
           {"bound", o.bound},
           {"verdict", sweep_verdict_name(o.verdict)}};
  if (!o.note.empty()) j["note"] = o.note;
  if (o.witness_f) j["witness_f"] = *o.witness_f;
  if (o.witness_g) j["witness_g"] = *o.witness_g;
}

}  // namespace extset
