#pragma once
#include <string>
#include <greyrank/pipeline.hpp>

namespace greyrank {

enum class ReportFormat
{
    json,
    table
};

json report_to_json(const Report& r);
Report report_from_json(const json& doc);

// JSON keeps full double precision; the table prints scores to 4 decimals.
std::string emit_report(const Report& r, ReportFormat format);

// Plan names ordered by final rank, best first.
std::vector<std::string> final_order(const Report& r);

} // namespace greyrank
