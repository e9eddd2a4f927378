#pragma once

// Text, JSON and DOT renderings of reports and Hasse diagrams.  Every
// renderer is a pure function of its input, so output is byte-stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "renner/counting.hpp"
#include "renner/nilpotent.hpp"
#include "renner/order.hpp"
#include "renner/verify.hpp"

namespace renner {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings.
nlohmann::json bigint_json(const BigInt& v);

nlohmann::json report_json(const CountReport& r);
nlohmann::json nilpotent_json(const NilpotentReport& r);
nlohmann::json outcome_json(const CheckOutcome& outcome);

/// Aligned table, one row per report; absent forms print as "-".
std::string render_reports(const std::vector<CountReport>& reports);
std::string render_nilpotent(const std::vector<NilpotentReport>& reports);
/// Reports, nilpotent table, assertions and a summary line.
std::string render_outcome(const CheckOutcome& outcome);

/// digraph with one quoted one-line label per node and one edge per cover,
/// lower -> upper, both in lexicographic order.
std::string dot_export(const HasseDiagram& h);
nlohmann::json hasse_json(const HasseDiagram& h);

}  // namespace renner
