#pragma once
#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>
#include <json.hpp>
#include <greyrank/normalize.hpp>
#include <greyrank/ranking.hpp>
#include <greyrank/weights.hpp>

namespace greyrank {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

struct Params
{
    double rho = 0.5;
    double theta_pos = 0.5;
    double theta_neg = 0.5;
    double lambda = 0.5;
    GammaMode gamma_mode = GammaMode::equal;
    std::array<double, 3> method_weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    PreferenceScaling preference_scaling = PreferenceScaling::max;

    friend bool operator==(const Params&, const Params&) = default;
};

struct ProblemFile
{
    DecisionMatrix<double> decision;
    std::vector<JudgmentMatrix<double>> experts;
    std::optional<IntervalVector<double>> preference;
    Params params;
};

// Parses and validates a problem document. Throws validation_error with
// a field-path prefix such as "plans[2].values[3]: ...".
ProblemFile problem_from_json(const json& doc);
ProblemFile parse_problem(const std::filesystem::path& path);
ProblemFile parse_problem_text(const std::string& text);

// Canonical form with every parameter materialized.
json problem_to_json(const ProblemFile& p);

bool equivalent(const ProblemFile& a, const ProblemFile& b);

const char* to_string(GammaMode m);
const char* to_string(PreferenceScaling s);
const char* to_string(AttributeKind k);

} // namespace greyrank
