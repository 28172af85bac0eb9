#include <greyrank/report.hpp>
#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace greyrank {
namespace {

template <class Derived>
json crisp_json(const Eigen::DenseBase<Derived>& v)
{
    json out = json::array();
    for (index_t i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

json crisp_matrix_json(const array_type<double>& a)
{
    json rows = json::array();
    for (index_t i = 0; i < a.rows(); ++i) rows.push_back(crisp_json(a.row(i)));
    return rows;
}

json interval_vector_json(const IntervalVector<double>& v)
{
    json out = json::array();
    for (index_t i = 0; i < v.size(); ++i) out.push_back(json::array({v.lo(i), v.hi(i)}));
    return out;
}

json interval_matrix_json(const IntervalMatrix<double>& a)
{
    json rows = json::array();
    for (index_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (index_t j = 0; j < a.cols(); ++j) row.push_back(json::array({a.lo(i, j), a.hi(i, j)}));
        rows.push_back(std::move(row));
    }
    return rows;
}

vec_type<double> read_crisp(const json& v)
{
    vec_type<double> out(static_cast<index_t>(v.size()));
    for (index_t i = 0; i < out.size(); ++i) out(i) = v.at(i).get<double>();
    return out;
}

array_type<double> read_crisp_matrix(const json& v)
{
    const auto n = static_cast<index_t>(v.size());
    const auto m = n ? static_cast<index_t>(v.at(0).size()) : 0;
    array_type<double> out(n, m);
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < m; ++j) out(i, j) = v.at(i).at(j).get<double>();
    }
    return out;
}

IntervalVector<double> read_interval_vector(const json& v)
{
    IntervalVector<double> out(static_cast<index_t>(v.size()), 1);
    for (index_t i = 0; i < out.size(); ++i) {
        out.lo(i) = v.at(i).at(0).get<double>();
        out.hi(i) = v.at(i).at(1).get<double>();
    }
    return out;
}

IntervalMatrix<double> read_interval_matrix(const json& v)
{
    const auto n = static_cast<index_t>(v.size());
    const auto m = n ? static_cast<index_t>(v.at(0).size()) : 0;
    IntervalMatrix<double> out(n, m);
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < m; ++j) {
            out.lo(i, j) = v.at(i).at(j).at(0).get<double>();
            out.hi(i, j) = v.at(i).at(j).at(1).get<double>();
        }
    }
    return out;
}

Method read_method(const std::string& s)
{
    for (auto m : {Method::topsis, Method::incidence_approach, Method::incidence_membership}) {
        if (s == method_name(m)) return m;
    }
    throw validation_error("report: unknown method '" + s + "'");
}

std::string fixed4(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

std::string score_vector(const vec_type<double>& v)
{
    std::string out = "(";
    for (index_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fixed4(v(i));
    return out + ")";
}

std::string rank_cell(double r)
{
    std::ostringstream os;
    if (r == std::floor(r)) os << static_cast<long>(r);
    else os << std::fixed << std::setprecision(1) << r;
    return os.str();
}

std::string interval_cell(double lo, double hi)
{
    return "[" + fixed4(lo) + ", " + fixed4(hi) + "]";
}

} // namespace

json report_to_json(const Report& r)
{
    json doc;
    doc["schema"] = schema_version;
    doc["problem"] = problem_to_json(r.problem);
    doc["normalized"] = interval_matrix_json(r.normalized);

    const auto& w = r.weights;
    json ahp = json::array();
    for (const auto& a : w.ahp) {
        ahp.push_back({
            {"weights", crisp_json(a.weights)},
            {"lambda_max", a.lambda_max},
            {"consistency_index", a.consistency_index},
            {"consistency_ratio", a.consistency_ratio},
            {"iterations", a.iterations},
        });
    }
    doc["weights"] = {
        {"ahp", std::move(ahp)},
        {"subjective", interval_vector_json(w.subjective)},
        {"objective_opt", crisp_json(w.objective_opt)},
        {"entropy_lower", crisp_json(w.entropy_lo)},
        {"entropy_upper", crisp_json(w.entropy_hi)},
        {"objective", interval_vector_json(w.objective)},
        {"final", interval_vector_json(w.final)},
    };
    doc["preference_scale"] = r.preference_scale;
    doc["blended"] = interval_matrix_json(r.blended);
    doc["weighted"] = interval_matrix_json(r.weighted);
    doc["ideals"] = {
        {"positive", interval_vector_json(r.ideals.positive)},
        {"negative", interval_vector_json(r.ideals.negative)},
    };
    doc["incidence"] = {
        {"positive", crisp_matrix_json(r.incidence.positive)},
        {"negative", crisp_matrix_json(r.incidence.negative)},
        {"positive_degenerate", r.incidence.positive_degenerate},
        {"negative_degenerate", r.incidence.negative_degenerate},
        {"gamma_mode", to_string(r.problem.params.gamma_mode)},
        {"gamma", crisp_json(r.gamma)},
        {"degree_positive", crisp_json(r.incidence_pos)},
        {"degree_negative", crisp_json(r.incidence_neg)},
    };

    json methods = json::array();
    for (const auto& m : r.ranking.methods) {
        json params = json::object();
        for (const auto& [k, v] : m.params) params[k] = v;
        methods.push_back({
            {"method", method_name(m.method)},
            {"scores", crisp_json(m.scores)},
            {"ranks", crisp_json(m.ranks)},
            {"params", std::move(params)},
        });
    }
    doc["methods"] = std::move(methods);

    json order = json::array();
    for (const auto& name : final_order(r)) order.push_back(name);
    doc["borda"] = {
        {"rule", "weighted Borda count, points = n - rank"},
        {"method_weights", crisp_json(r.ranking.method_weights)},
        {"scores", crisp_json(r.ranking.borda_scores)},
        {"final_ranks", crisp_json(r.ranking.final_ranks)},
        {"order", std::move(order)},
    };

    json trace = json::array();
    for (const auto& e : r.trace) trace.push_back({{"code", e.code}, {"message", e.message}});
    doc["trace"] = std::move(trace);
    return doc;
}

Report report_from_json(const json& doc)
{
    try {
        if (doc.at("schema").get<int>() != schema_version) throw validation_error("report: unsupported schema version");
        Report r;
        r.problem = problem_from_json(doc.at("problem"));
        r.normalized = read_interval_matrix(doc.at("normalized"));

        const auto& w = doc.at("weights");
        for (const auto& a : w.at("ahp")) {
            AhpResult<double> res;
            res.weights = read_crisp(a.at("weights"));
            res.lambda_max = a.at("lambda_max").get<double>();
            res.consistency_index = a.at("consistency_index").get<double>();
            res.consistency_ratio = a.at("consistency_ratio").get<double>();
            res.iterations = a.at("iterations").get<int>();
            r.weights.ahp.push_back(std::move(res));
        }
        r.weights.subjective = read_interval_vector(w.at("subjective"));
        r.weights.objective_opt = read_crisp(w.at("objective_opt"));
        r.weights.entropy_lo = read_crisp(w.at("entropy_lower"));
        r.weights.entropy_hi = read_crisp(w.at("entropy_upper"));
        r.weights.objective = read_interval_vector(w.at("objective"));
        r.weights.final = read_interval_vector(w.at("final"));

        r.preference_scale = doc.at("preference_scale").get<double>();
        r.blended = read_interval_matrix(doc.at("blended"));
        r.weighted = read_interval_matrix(doc.at("weighted"));
        r.ideals.positive = read_interval_vector(doc.at("ideals").at("positive"));
        r.ideals.negative = read_interval_vector(doc.at("ideals").at("negative"));

        const auto& inc = doc.at("incidence");
        r.incidence.positive = read_crisp_matrix(inc.at("positive"));
        r.incidence.negative = read_crisp_matrix(inc.at("negative"));
        r.incidence.positive_degenerate = inc.at("positive_degenerate").get<bool>();
        r.incidence.negative_degenerate = inc.at("negative_degenerate").get<bool>();
        r.gamma = read_crisp(inc.at("gamma"));
        r.incidence_pos = read_crisp(inc.at("degree_positive"));
        r.incidence_neg = read_crisp(inc.at("degree_negative"));

        for (const auto& m : doc.at("methods")) {
            MethodResult<double> res;
            res.method = read_method(m.at("method").get<std::string>());
            res.scores = read_crisp(m.at("scores"));
            res.ranks = read_crisp(m.at("ranks"));
            for (const auto& [k, v] : m.at("params").items()) res.params.emplace_back(k, v.get<double>());
            r.ranking.methods.push_back(std::move(res));
        }
        const auto& b = doc.at("borda");
        r.ranking.method_weights = read_crisp(b.at("method_weights"));
        r.ranking.borda_scores = read_crisp(b.at("scores"));
        const auto& fr = b.at("final_ranks");
        r.ranking.final_ranks.resize(static_cast<index_t>(fr.size()));
        for (index_t i = 0; i < r.ranking.final_ranks.size(); ++i) r.ranking.final_ranks(i) = fr.at(i).get<int>();

        for (const auto& e : doc.at("trace")) {
            r.trace.push_back({e.at("code").get<std::string>(), e.at("message").get<std::string>()});
        }
        return r;
    } catch (const json::exception& e) {
        throw validation_error(std::string("report: ") + e.what());
    }
}

std::vector<std::string> final_order(const Report& r)
{
    const auto& ranks = r.ranking.final_ranks;
    std::vector<index_t> idx(ranks.size());
    std::iota(idx.begin(), idx.end(), index_t(0));
    std::sort(idx.begin(), idx.end(), [&](index_t a, index_t b) { return ranks(a) < ranks(b); });
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(r.problem.decision.plans[i]);
    return out;
}

std::string emit_report(const Report& r, ReportFormat format)
{
    if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";

    const auto& dm = r.problem.decision;
    const auto& p = r.problem.params;
    std::ostringstream os;
    os << "Grey interval ranking (" << dm.n_plans() << " plans, " << dm.n_attributes() << " attributes)\n\n";

    const char* labels[] = {"C ", "C'", "u "};
    const char* titles[] = {
        "TOPSIS relative approach degree     ",
        "Incidence relative approach degree  ",
        "Incidence relative membership degree",
    };
    os << "Scores\n";
    for (std::size_t k = 0; k < r.ranking.methods.size(); ++k) {
        const auto& m = r.ranking.methods[k];
        const auto idx = static_cast<std::size_t>(m.method);
        os << "  " << titles[idx] << "  " << labels[idx] << " = " << score_vector(m.scores) << "\n";
    }
    os << "  Weighted Borda score                  B  = " << score_vector(r.ranking.borda_scores) << "\n\n";

    std::size_t width = 6;
    for (const auto& name : dm.plans) width = std::max(width, name.size() + 2);
    os << "Ranks" << std::string(20, ' ');
    for (const auto& name : dm.plans) os << std::setw(static_cast<int>(width)) << name;
    os << "\n";
    for (const auto& m : r.ranking.methods) {
        os << "  " << std::left << std::setw(23) << method_name(m.method) << std::right;
        for (index_t i = 0; i < m.ranks.size(); ++i) os << std::setw(static_cast<int>(width)) << rank_cell(m.ranks(i));
        os << "\n";
    }
    os << "  " << std::left << std::setw(23) << "borda (final)" << std::right;
    for (index_t i = 0; i < r.ranking.final_ranks.size(); ++i) os << std::setw(static_cast<int>(width)) << r.ranking.final_ranks(i);
    os << "\n\nFinal rank: ";
    const auto order = final_order(r);
    for (std::size_t k = 0; k < order.size(); ++k) os << (k ? " > " : "") << order[k];
    os << "\n\n";

    std::size_t aw = 10;
    for (const auto& a : dm.attributes) aw = std::max(aw, a.name.size() + 2);
    os << "Weights\n  " << std::left << std::setw(static_cast<int>(aw)) << "attribute"
       << std::setw(20) << "subjective" << std::setw(20) << "objective" << "final\n";
    for (index_t j = 0; j < dm.n_attributes(); ++j) {
        const auto& w = r.weights;
        os << "  " << std::setw(static_cast<int>(aw)) << dm.attributes[j].name
           << std::setw(20) << interval_cell(w.subjective.lo(j), w.subjective.hi(j))
           << std::setw(20) << interval_cell(w.objective.lo(j), w.objective.hi(j))
           << interval_cell(w.final.lo(j), w.final.hi(j)) << "\n";
    }
    os << std::right << "  AHP consistency ratio:";
    for (const auto& a : r.weights.ahp) os << " " << fixed4(a.consistency_ratio);
    os << "\n\n";

    const auto& approach = r.ranking.methods.size() > 1 ? r.ranking.methods[1].params : decltype(r.ranking.methods[0].params){};
    os << "Parameters\n"
       << "  rho = " << p.rho << ", theta = (" << p.theta_pos << ", " << p.theta_neg << ")";
    for (const auto& [k, v] : approach) {
        if (k == "theta_pos") os << " -> (" << v;
        if (k == "theta_neg") os << ", " << v << ")";
    }
    os << ", lambda = " << p.lambda << ", gamma = " << to_string(p.gamma_mode)
       << ", preference scaling = " << to_string(p.preference_scaling)
       << ", method weights = (" << fixed4(p.method_weights[0]) << ", " << fixed4(p.method_weights[1])
       << ", " << fixed4(p.method_weights[2]) << ")\n\n";

    os << "Decisions trace\n";
    if (r.trace.empty()) {
        os << "  no fallbacks fired\n";
    } else {
        for (const auto& e : r.trace) os << "  - [" << e.code << "] " << e.message << "\n";
    }
    return os.str();
}

} // namespace greyrank
