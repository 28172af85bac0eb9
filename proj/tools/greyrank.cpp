#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <greyrank/example.hpp>
#include <greyrank/report.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_degenerate = 2;

struct RankOptions
{
    std::string problem_path;
    std::string report_path;
    std::optional<std::string> format;
    std::optional<std::string> gamma;
    std::optional<double> theta_pos;
    std::optional<double> theta_neg;
    std::optional<double> rho;
    std::optional<double> lambda;
    std::optional<std::string> preference_scaling;
    bool verify_example = false;
};

greyrank::json load_document(const std::string& text)
{
    try {
        return greyrank::json::parse(text);
    } catch (const greyrank::json::parse_error& e) {
        throw greyrank::validation_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw greyrank::validation_error("cannot open problem file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Command-line overrides are merged into the document so they go through
// the same validation (and field-path diagnostics) as file parameters.
void apply_overrides(greyrank::json& doc, const RankOptions& opt)
{
    if (!doc.is_object()) return;
    auto& params = doc["params"];
    if (params.is_null()) params = greyrank::json::object();
    if (!params.is_object()) return;
    if (opt.gamma) params["gamma_mode"] = *opt.gamma;
    if (opt.theta_pos) params["theta_pos"] = *opt.theta_pos;
    if (opt.theta_neg) params["theta_neg"] = *opt.theta_neg;
    if (opt.rho) params["rho"] = *opt.rho;
    if (opt.lambda) params["lambda"] = *opt.lambda;
    if (opt.preference_scaling) params["preference_scaling"] = *opt.preference_scaling;
}

int verify_example(const RankOptions& opt)
{
    auto doc = load_document(greyrank::example::problem_text());
    apply_overrides(doc, opt);
    const auto report = greyrank::run_pipeline(greyrank::problem_from_json(doc));
    const auto v = greyrank::example::verify(report);
    std::cout << "Reference example: computed vs expected\n\n" << v.table << "\n";
    const bool ok = v.method_orders_match && v.final_order_matches;
    std::cout << "plan orders: " << (ok ? "PASS" : "FAIL") << "\n"
              << "score vectors (soft): " << (v.scores_within_tolerance ? "within tolerance" : "discrepancies listed above") << "\n";
    return ok ? exit_ok : exit_validation;
}

int run_rank(const RankOptions& opt)
{
    if (opt.verify_example) return verify_example(opt);
    if (opt.problem_path.empty()) {
        throw greyrank::validation_error("a problem file is required unless --verify-example is given");
    }

    auto doc = load_document(read_file(opt.problem_path));
    apply_overrides(doc, opt);
    const auto report = greyrank::run_pipeline(greyrank::problem_from_json(doc));

    const std::string default_format = opt.report_path.empty() ? "json" : "table";
    const auto format = opt.format.value_or(default_format) == "table"
        ? greyrank::ReportFormat::table : greyrank::ReportFormat::json;

    if (!opt.report_path.empty()) {
        std::ofstream out(opt.report_path, std::ios::binary);
        if (!out) throw greyrank::validation_error("cannot write report '" + opt.report_path + "'");
        out << greyrank::emit_report(report, greyrank::ReportFormat::json);
    }
    std::cout << greyrank::emit_report(report, format);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Grey interval multi-attribute ranking"};
    app.require_subcommand(1);

    RankOptions opt;
    auto* rank = app.add_subcommand("rank", "Rank the plans of a problem file");
    rank->add_option("problem", opt.problem_path, "Problem file (JSON, schema 1)");
    rank->add_option("--report", opt.report_path, "Write the JSON report to this path");
    rank->add_option("--format", opt.format, "Stdout format (default: json, or table when --report is given)")
        ->check(CLI::IsMember({"json", "table"}));
    rank->add_option("--gamma", opt.gamma, "Incidence coefficient weights")->check(CLI::IsMember({"equal", "lp"}));
    rank->add_option("--theta-pos", opt.theta_pos, "Positive-ideal preference coefficient");
    rank->add_option("--theta-neg", opt.theta_neg, "Negative-ideal preference coefficient");
    rank->add_option("--rho", opt.rho, "Distinguishing coefficient in (0, 1)");
    rank->add_option("--lambda", opt.lambda, "Preference blend coefficient in [0, 1]");
    rank->add_option("--preference-scaling", opt.preference_scaling, "Preference rescaling before the blend")
        ->check(CLI::IsMember({"max", "none"}));
    rank->add_flag("--verify-example", opt.verify_example, "Run the bundled reference problem and diff against expected results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        return run_rank(opt);
    } catch (const greyrank::degenerate_error& e) {
        std::cerr << "degenerate problem: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const greyrank::validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
}
