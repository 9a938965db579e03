#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coprime/analysis.hpp"

namespace coprime {

// Serialization of sweep reports and code tables. Everything here is
// deterministic: fixed field order, fixed row order, big integers as
// decimal strings (sums exceed 2^53 within reachable sweep depths).

nlohmann::ordered_json report_to_json(const SweepReport& report);
std::string report_to_json_text(const SweepReport& report);

// Human-readable summary, e.g. "checked 254 codes, 0 violations".
std::string report_summary_text(const SweepReport& report);

// One exported row per visited code.
struct TableRow {
    Code code;
    Pair pair;
};

// Header "code,length,weight,var_num,var_den,a,b,sum"; empty code renders
// as an empty code field with empty var fields (the root has no variance).
std::string table_to_csv(const std::vector<TableRow>& rows);

// Aligned human listing: code, a, b, sum, weight, var.
std::string table_to_text(const std::vector<TableRow>& rows);

std::string table_to_json_text(const std::vector<TableRow>& rows);

} // namespace coprime
