#pragma once
#include <array>
#include <string>
#include <vector>
#include <greyrank/report.hpp>

namespace greyrank::example {

// The bundled five-plan, six-attribute reference problem
// (data/reference_problem.json, embedded at build time).
const std::string& problem_text();

// Expected plan order and score vectors (C, C', u) for the reference
// problem. Orders are gated; scores are compared at `score_tolerance`.
const std::vector<std::string>& expected_order();
const std::array<std::array<double, 5>, 3>& expected_scores();
inline constexpr double score_tolerance = 0.05;

struct Verification
{
    bool method_orders_match = false;
    bool final_order_matches = false;
    bool scores_within_tolerance = false;
    double max_score_gap = 0;
    std::string table;     // human-readable diff, one row per method
};

Verification verify(const Report& report);

} // namespace greyrank::example
