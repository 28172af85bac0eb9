#include <greyrank/example.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace greyrank::example {

extern const char* const embedded_problem;

const std::string& problem_text()
{
    static const std::string text = embedded_problem;
    return text;
}

const std::vector<std::string>& expected_order()
{
    static const std::vector<std::string> order = {"A5", "A4", "A2", "A1", "A3"};
    return order;
}

const std::array<std::array<double, 5>, 3>& expected_scores()
{
    static const std::array<std::array<double, 5>, 3> scores = {{
        {0.4449, 0.5078, 0.0842, 0.5205, 1.0000},
        {0.4809, 0.4963, 0.3714, 0.5006, 0.6411},
        {0.4618, 0.4926, 0.2588, 0.5013, 0.7614},
    }};
    return scores;
}

namespace {

std::vector<std::string> order_by_rank(const vec_type<double>& ranks, const std::vector<std::string>& plans)
{
    std::vector<index_t> idx(ranks.size());
    std::iota(idx.begin(), idx.end(), index_t(0));
    std::stable_sort(idx.begin(), idx.end(), [&](index_t a, index_t b) { return ranks(a) < ranks(b); });
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(plans[i]);
    return out;
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " > " : "") + v[k];
    return s;
}

} // namespace

Verification verify(const Report& report)
{
    Verification v;
    const auto& plans = report.problem.decision.plans;
    const auto& expected = expected_scores();
    const char* labels[] = {"C ", "C'", "u "};

    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    v.method_orders_match = report.ranking.methods.size() == 3;
    bool within = true;
    for (std::size_t k = 0; k < report.ranking.methods.size() && k < 3; ++k) {
        const auto& m = report.ranking.methods[k];
        const auto order = order_by_rank(m.ranks, plans);
        const bool order_ok = order == expected_order();
        v.method_orders_match = v.method_orders_match && order_ok;

        os << labels[k] << "  computed  (";
        for (index_t i = 0; i < m.scores.size(); ++i) os << (i ? ", " : "") << m.scores(i);
        os << ")\n    expected (";
        for (std::size_t i = 0; i < 5; ++i) os << (i ? ", " : "") << expected[k][i];
        os << ")\n    gap       (";
        for (index_t i = 0; i < m.scores.size() && i < 5; ++i) {
            const double gap = std::abs(m.scores(i) - expected[k][i]);
            v.max_score_gap = std::max(v.max_score_gap, gap);
            if (gap > score_tolerance) within = false;
            os << (i ? ", " : "") << gap << (gap > score_tolerance ? "!" : "");
        }
        os << ")\n    order     " << join(order) << (order_ok ? "  [matches]" : "  [DIFFERS]") << "\n";
    }
    v.scores_within_tolerance = within && report.ranking.methods.size() == 3;

    std::vector<std::string> final;
    const auto& fr = report.ranking.final_ranks;
    vec_type<double> frd = fr.cast<double>().array();
    final = order_by_rank(frd, plans);
    v.final_order_matches = final == expected_order();
    os << "final  " << join(final) << (v.final_order_matches ? "  [matches]" : "  [DIFFERS]") << "\n";
    os << "max |computed - expected| = " << v.max_score_gap << " (tolerance " << score_tolerance << ")\n";
    if (!within) {
        os << "Entries marked ! exceed the tolerance. The expected intermediate weights are not\n"
              "available; likely sources are the preference scaling mode and the interval-sum\n"
              "denominator of the final weights.\n";
    }
    v.table = os.str();
    return v;
}

} // namespace greyrank::example
