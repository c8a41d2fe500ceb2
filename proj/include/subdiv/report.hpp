#pragma once

// JSON forms of the verification reports, used by the CLI's --json output.

#include <json.hpp>

#include "subdiv/algebra.hpp"
#include "subdiv/groebner.hpp"
#include "subdiv/rewrite.hpp"
#include "subdiv/series.hpp"

namespace subdiv {

using Json = nlohmann::ordered_json;

Json report_json(const BuchbergerReport& r);
Json report_json(const SpolIdentityReport& r);
Json report_json(const TUniqueReport& r);
Json report_json(const AKillsJReport& r);
Json report_json(const EdBaReport& r);
Json report_json(const SymmetryReport& r);
Json report_json(const CountTable& t);
Json trace_json(const ReductionTrace& t);

CountTable count_table_from_json(const Json& j);

}  // namespace subdiv
