#pragma once
#include <greyrank/problem.hpp>
#include <greyrank/ranking.hpp>
#include <greyrank/trace.hpp>
#include <greyrank/weights.hpp>

namespace greyrank {

/**
 * Everything computed for one problem, in pipeline order. The echoed
 * problem carries the effective parameters, so re-running on it
 * reproduces the report.
 */
struct Report
{
    ProblemFile problem;
    IntervalMatrix<double> normalized;
    WeightBundle<double> weights;
    double preference_scale = 1.0;
    IntervalMatrix<double> blended;
    IntervalMatrix<double> weighted;
    IdealPair<double> ideals;
    IncidenceCoefficients<double> incidence;
    vec_type<double> gamma;
    vec_type<double> incidence_pos;
    vec_type<double> incidence_neg;
    RankReport<double> ranking;
    Trace trace;
};

// normalize -> weights -> blend/weight -> three rankers -> Borda.
// Domain errors are rethrown with the failing stage prefixed.
Report run_pipeline(const ProblemFile& problem);

} // namespace greyrank
