#include <greyrank/pipeline.hpp>
#include <sstream>
#include <string>

namespace greyrank {
namespace {

template <class F>
auto staged(const char* stage, F&& fn)
{
    try {
        return fn();
    } catch (const validation_error& e) {
        throw validation_error(std::string(stage) + ": " + e.what());
    } catch (const degenerate_error& e) {
        throw degenerate_error(std::string(stage) + ": " + e.what());
    }
}

std::string join_numbers(const vec_type<double>& v)
{
    std::ostringstream os;
    os.precision(6);
    for (index_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
    return os.str();
}

void record_ties(const MethodResult<double>& r, const std::vector<std::string>& plans, Trace& trace)
{
    if (!has_ties(r.ranks)) return;
    std::string tied;
    for (index_t i = 0; i < r.ranks.size(); ++i) {
        if (r.ranks(i) != std::floor(r.ranks(i))) tied += (tied.empty() ? "" : ", ") + plans[i];
    }
    trace.push_back({"score_tie", std::string(method_name(r.method)) + ": tied scores share average ranks (" + tied + ")"});
}

} // namespace

Report run_pipeline(const ProblemFile& problem)
{
    Report rep;
    rep.problem = problem;
    const auto& params = problem.params;
    const auto& plans = problem.decision.plans;
    auto& trace = rep.trace;

    rep.normalized = staged("normalize", [&] { return normalize_matrix(problem.decision); });

    rep.weights = staged("weights", [&] {
        return compute_weight_bundle<double>(rep.normalized, problem.experts, trace);
    });

    rep.blended = staged("preference", [&] {
        if (!problem.preference) {
            trace.push_back({"no_preference", "no preference supplied; ranking on the normalized matrix"});
            return rep.normalized;
        }
        auto [q, factor] = rescale_preference(*problem.preference, params.preference_scaling);
        rep.preference_scale = factor;
        if (params.preference_scaling == PreferenceScaling::max) {
            std::ostringstream os;
            os.precision(17);
            os << "preference divided by max upper bound " << factor;
            trace.push_back({"preference_rescaled", os.str()});
        } else if (q.hi.maxCoeff() > 1) {
            trace.push_back({"preference_unscaled", "preference exceeds 1 and is blended unscaled (preference_scaling = none)"});
        }
        return blend_preference(rep.normalized, q, params.lambda);
    });

    rep.weighted = staged("weighting", [&] { return weighted_matrix(rep.blended, rep.weights.final); });
    rep.ideals = ideal_vectors(rep.weighted);

    auto topsis = staged("topsis", [&] { return topsis_scores(rep.weighted, rep.ideals); });

    rep.incidence = staged("incidence", [&] { return incidence_coefficients(rep.weighted, rep.ideals, params.rho); });
    if (rep.incidence.positive_degenerate) {
        trace.push_back({"incidence_positive_degenerate", "all distances to the positive ideal are zero; coefficients set to 1"});
    }
    if (rep.incidence.negative_degenerate) {
        trace.push_back({"incidence_negative_degenerate", "all distances to the negative ideal are zero; coefficients set to 1"});
    }

    const index_t m = rep.weighted.cols();
    if (params.gamma_mode == GammaMode::lp) {
        rep.gamma = gamma_weights_lp(rep.incidence.positive, rep.incidence.negative);
        trace.push_back({"gamma_lp", "incidence coefficient weights from the simplex LP: (" + join_numbers(rep.gamma) + ")"});
    } else {
        rep.gamma = equal_gamma<double>(m);
    }
    rep.incidence_pos = incidence_degrees(rep.incidence.positive, rep.gamma);
    rep.incidence_neg = incidence_degrees(rep.incidence.negative, rep.gamma);

    auto approach = staged("incidence_approach", [&] {
        return incidence_approach_scores(rep.incidence_pos, rep.incidence_neg, params.theta_pos, params.theta_neg);
    });
    if (approach.params[0].second != params.theta_pos || approach.params[1].second != params.theta_neg) {
        std::ostringstream os;
        os.precision(17);
        os << "theta normalized to (" << approach.params[0].second << ", " << approach.params[1].second << ")";
        trace.push_back({"theta_normalized", os.str()});
    }
    auto membership = staged("incidence_membership", [&] { return membership_scores(rep.incidence_pos, rep.incidence_neg); });

    approach.params.insert(approach.params.begin(), {"rho", params.rho});
    membership.params = {{"rho", params.rho}};

    for (const auto* r : {&topsis, &approach, &membership}) record_ties(*r, plans, trace);

    vec_type<double> mw(3);
    mw << params.method_weights[0], params.method_weights[1], params.method_weights[2];
    rep.ranking = staged("borda", [&] {
        return borda_aggregate<double>({std::move(topsis), std::move(approach), std::move(membership)}, mw);
    });
    if (has_ties(rank_descending(rep.ranking.borda_scores))) {
        trace.push_back({"borda_tie", "tied Borda scores broken by TOPSIS score, then plan order"});
    }
    return rep;
}

} // namespace greyrank
