#pragma once

#include "json.hpp"

#include "extset/family.hpp"
#include "extset/nip.hpp"
#include "extset/params.hpp"
#include "extset/predicates.hpp"
#include "extset/search.hpp"
#include "extset/separated.hpp"
#include "extset/shifting.hpp"

namespace extset {

// nlohmann ADL hooks.  Rationals render as exact "num/den" strings.
void to_json(nlohmann::json& j, const Family& f);
void to_json(nlohmann::json& j, const ShiftPair& s);
void to_json(nlohmann::json& j, const CheckResult& r);
void to_json(nlohmann::json& j, const CorrelationReport& r);
void to_json(nlohmann::json& j, const WeightTable& w);
void to_json(nlohmann::json& j, const T3Report& r);
void to_json(nlohmann::json& j, const NipReport& r);
void to_json(nlohmann::json& j, const CompressResult& r);
void to_json(nlohmann::json& j, const TraceStep& s);
void to_json(nlohmann::json& j, const TerminalResult& r);
void to_json(nlohmann::json& j, const PairMaxReport& r);
void to_json(nlohmann::json& j, const IuAggregate& a);
void to_json(nlohmann::json& j, const T2Report& r);
void to_json(nlohmann::json& j, const T2RandomReport& r);
void to_json(nlohmann::json& j, const SweepOutcome& o);

nlohmann::json set_to_json(SetMask m);

}  // namespace extset
