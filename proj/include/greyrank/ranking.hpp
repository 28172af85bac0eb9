#pragma once
#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>
#include <greyrank/grey_interval.hpp>

namespace greyrank {

enum class Method
{
    topsis,
    incidence_approach,
    incidence_membership
};

inline const char* method_name(Method m)
{
    switch (m) {
        case Method::topsis: return "topsis";
        case Method::incidence_approach: return "incidence_approach";
        case Method::incidence_membership: return "incidence_membership";
    }
    return "?";
}

enum class PreferenceScaling
{
    max,    // divide both bounds by max_i q_i.hi
    none
};

enum class GammaMode
{
    equal,
    lp
};

inline constexpr double score_tie_tol = 1e-12;
inline constexpr double simplex_tol = 1e-9;

template <class ValueType>
struct MethodResult
{
    Method method = Method::topsis;
    vec_type<ValueType> scores;
    vec_type<ValueType> ranks;     // 1 = best; exact ties share the average rank
    std::vector<std::pair<std::string, ValueType>> params;
};

template <class ValueType>
struct IdealPair
{
    IntervalVector<ValueType> positive;
    IntervalVector<ValueType> negative;
};

/**
 * Descending ranks with average-rank tie handling. Scores within
 * `tol` of the first score in a run are tied.
 */
template <class T>
vec_type<T> rank_descending(const vec_type<T>& scores, T tol = score_tie_tol)
{
    const index_t n = scores.size();
    std::vector<index_t> order(n);
    std::iota(order.begin(), order.end(), index_t(0));
    std::stable_sort(order.begin(), order.end(),
        [&](index_t a, index_t b) { return scores(a) > scores(b); });

    vec_type<T> ranks(n);
    index_t start = 0;
    while (start < n) {
        index_t end = start + 1;
        while (end < n && std::abs(scores(order[start]) - scores(order[end])) <= tol) ++end;
        // positions start..end-1 hold ranks start+1..end
        const T avg = T(start + 1 + end) / 2;
        for (index_t k = start; k < end; ++k) ranks(order[k]) = avg;
        start = end;
    }
    return ranks;
}

template <class T>
bool has_ties(const vec_type<T>& ranks)
{
    return (ranks != ranks.floor()).any();
}

/// Divides q by max_i q_i.hi when scaling is `max`; returns the divisor used.
template <class T>
std::pair<IntervalVector<T>, T> rescale_preference(const IntervalVector<T>& q, PreferenceScaling scaling)
{
    if (!q.ordered() || !q.non_negative()) {
        throw validation_error("preference intervals must be ordered and non-negative");
    }
    if (scaling == PreferenceScaling::none) return {q, T(1)};
    const T factor = q.hi.maxCoeff();
    if (!(factor > 0)) return {q, T(1)};
    return {IntervalVector<T>(q.lo / factor, q.hi / factor), factor};
}

/// z_ij = lambda * q_i + (1 - lambda) * x_ij, endpointwise.
template <class T>
IntervalMatrix<T> blend_preference(const IntervalMatrix<T>& x, const IntervalVector<T>& q, T lambda = T(0.5))
{
    if (q.size() != x.rows()) throw validation_error("preference length does not match plan count");
    if (!(lambda >= 0 && lambda <= 1)) throw validation_error("blend coefficient must lie in [0, 1]");
    const index_t m = x.cols();
    return {
        lambda * q.lo.replicate(1, m) + (1 - lambda) * x.lo,
        lambda * q.hi.replicate(1, m) + (1 - lambda) * x.hi,
    };
}

/// y_ij = w_j * z_ij under non-negative interval multiplication.
template <class T>
IntervalMatrix<T> weighted_matrix(const IntervalMatrix<T>& z, const IntervalVector<T>& w)
{
    if (w.size() != z.cols()) throw validation_error("weight length does not match attribute count");
    if (!z.non_negative() || !w.non_negative()) {
        throw validation_error("weighted matrix requires non-negative operands");
    }
    return {
        z.lo.rowwise() * w.lo.transpose(),
        z.hi.rowwise() * w.hi.transpose(),
    };
}

template <class T>
IdealPair<T> ideal_vectors(const IntervalMatrix<T>& y)
{
    if (y.rows() < 1) throw validation_error("ideal vectors need at least one plan");
    return {
        {y.lo.colwise().maxCoeff().transpose(), y.hi.colwise().maxCoeff().transpose()},
        {y.lo.colwise().minCoeff().transpose(), y.hi.colwise().minCoeff().transpose()},
    };
}

/// d(y_ij, ideal_j) for every cell.
template <class T>
array_type<T> distance_to_ideal(const IntervalMatrix<T>& y, const IntervalVector<T>& ideal)
{
    const array_type<T> dl = y.lo.rowwise() - ideal.lo.transpose();
    const array_type<T> dh = y.hi.rowwise() - ideal.hi.transpose();
    return (dl.square() + dh.square()).sqrt();
}

/**
 * Grey TOPSIS relative approach degree C_i = D-_i / (D+_i + D-_i), where
 * D+-_i is the root-sum-square of bound gaps to the ideal over columns.
 */
template <class T>
MethodResult<T> topsis_scores(const IntervalMatrix<T>& y, const IdealPair<T>& ideals)
{
    const vec_type<T> d_pos = distance_to_ideal(y, ideals.positive).square().rowwise().sum().sqrt();
    const vec_type<T> d_neg = distance_to_ideal(y, ideals.negative).square().rowwise().sum().sqrt();
    const vec_type<T> total = d_pos + d_neg;
    if (!(total > 0).all()) {
        throw degenerate_error("TOPSIS undefined: every plan coincides with both ideals (all plans identical)");
    }
    MethodResult<T> r;
    r.method = Method::topsis;
    r.scores = d_neg / total;
    r.ranks = rank_descending(r.scores);
    return r;
}

template <class T>
struct IncidenceCoefficients
{
    array_type<T> positive;
    array_type<T> negative;
    bool positive_degenerate = false;
    bool negative_degenerate = false;
};

namespace detail {

template <class T>
array_type<T> incidence_from_distance(const array_type<T>& d, T rho, bool& degenerate)
{
    const T dmin = d.minCoeff();
    const T dmax = d.maxCoeff();
    degenerate = !(dmax > 0);
    if (degenerate) return array_type<T>::Ones(d.rows(), d.cols());
    return (dmin + rho * dmax) / (d + rho * dmax);
}

} // namespace detail

/**
 * Grey interval incidence coefficients against each ideal, with
 * distinguishing coefficient rho:
 *   r_ij = (min d + rho max d) / (d_ij + rho max d),
 * min/max taken over the whole matrix. When every distance is zero the
 * coefficients are all 1 and the side is flagged degenerate.
 */
template <class T>
IncidenceCoefficients<T> incidence_coefficients(const IntervalMatrix<T>& y, const IdealPair<T>& ideals, T rho = T(0.5))
{
    if (!(rho > 0 && rho < 1)) throw validation_error("distinguishing coefficient rho must lie in (0, 1)");
    IncidenceCoefficients<T> c;
    c.positive = detail::incidence_from_distance<T>(distance_to_ideal(y, ideals.positive), rho, c.positive_degenerate);
    c.negative = detail::incidence_from_distance<T>(distance_to_ideal(y, ideals.negative), rho, c.negative_degenerate);
    return c;
}

template <class T>
void check_simplex(const vec_type<T>& v, const char* what)
{
    if (!(v >= 0).all() || std::abs(v.sum() - 1) > simplex_tol) {
        throw validation_error(std::string(what) + " must be non-negative and sum to 1");
    }
}

/// G_i = sum_j gamma_j r_ij.
template <class T>
vec_type<T> incidence_degrees(const array_type<T>& r, const vec_type<T>& gamma)
{
    if (gamma.size() != r.cols()) throw validation_error("gamma length does not match attribute count");
    check_simplex(gamma, "gamma");
    return (r.matrix() * gamma.matrix()).array();
}

template <class T>
vec_type<T> equal_gamma(index_t m)
{
    return vec_type<T>::Constant(m, T(1) / m);
}

/// s_j = sum_i (r+_ij - r-_ij), the LP objective coefficients.
template <class T>
vec_type<T> gamma_lp_scores(const array_type<T>& r_pos, const array_type<T>& r_neg)
{
    if (r_pos.rows() != r_neg.rows() || r_pos.cols() != r_neg.cols()) {
        throw validation_error("incidence coefficient matrices differ in shape");
    }
    return (r_pos - r_neg).colwise().sum().transpose();
}

/**
 * Solves max sum_j s_j gamma_j over the simplex. The optimum sits at a
 * vertex; all argmax columns share the weight equally.
 */
template <class T>
vec_type<T> gamma_weights_lp(const array_type<T>& r_pos, const array_type<T>& r_neg)
{
    const vec_type<T> s = gamma_lp_scores(r_pos, r_neg);
    const T best = s.maxCoeff();
    vec_type<T> gamma = (s == best).template cast<T>();
    return gamma / gamma.sum();
}

/**
 * Relative approach degree of grey incidence with preference
 * coefficients. theta is normalized to sum 1; (1, 0) is the special
 * case that returns G+ directly.
 */
template <class T>
MethodResult<T> incidence_approach_scores(const vec_type<T>& g_pos, const vec_type<T>& g_neg, T theta_pos = T(0.5), T theta_neg = T(0.5))
{
    if (g_pos.size() != g_neg.size()) throw validation_error("incidence degree vectors differ in length");
    MethodResult<T> r;
    r.method = Method::incidence_approach;
    if (theta_pos == 1 && theta_neg == 0) {
        r.scores = g_pos;
        r.params = {{"theta_pos", T(1)}, {"theta_neg", T(0)}};
    } else {
        if (!(theta_pos > 0) || !(theta_neg > 0) || !std::isfinite(theta_pos) || !std::isfinite(theta_neg)) {
            throw validation_error("preference coefficients theta must be positive");
        }
        const T tp = theta_pos / (theta_pos + theta_neg);
        const T tn = theta_neg / (theta_pos + theta_neg);
        const vec_type<T> num = g_pos * tp;
        const vec_type<T> den = num + g_neg * tn;
        if (!(den > 0).all()) throw degenerate_error("incidence approach degree undefined: zero incidence degrees");
        r.scores = num / den;
        r.params = {{"theta_pos", tp}, {"theta_neg", tn}};
    }
    r.ranks = rank_descending(r.scores);
    return r;
}

/// Closed-form minimizer u_i = G+^2 / (G+^2 + G-^2) of the membership objective.
template <class T>
MethodResult<T> membership_scores(const vec_type<T>& g_pos, const vec_type<T>& g_neg)
{
    if (g_pos.size() != g_neg.size()) throw validation_error("incidence degree vectors differ in length");
    const vec_type<T> p2 = g_pos.square();
    const vec_type<T> den = p2 + g_neg.square();
    if (!(den > 0).all()) throw degenerate_error("membership degree undefined: both incidence degrees zero");
    MethodResult<T> r;
    r.method = Method::incidence_membership;
    r.scores = p2 / den;
    r.ranks = rank_descending(r.scores);
    return r;
}

/// F(u) = sum_i ((1 - u_i) G+_i)^2 + (u_i G-_i)^2.
template <class T>
T membership_objective(const vec_type<T>& u, const vec_type<T>& g_pos, const vec_type<T>& g_neg)
{
    return (((1 - u) * g_pos).square() + (u * g_neg).square()).sum();
}

template <class ValueType>
struct RankReport
{
    std::vector<MethodResult<ValueType>> methods;
    vec_type<ValueType> method_weights;
    vec_type<ValueType> borda_scores;
    Eigen::VectorXi final_ranks;
};

/**
 * Weighted Borda count: score_i = sum_k w_k (n - rank_k(i)).
 * Final ranks are strict: Borda ties (within 1e-12) are broken by the
 * TOPSIS score when a TOPSIS result is present, then by plan index.
 */
template <class T>
RankReport<T> borda_aggregate(std::vector<MethodResult<T>> results, const vec_type<T>& method_weights)
{
    if (results.empty()) throw validation_error("Borda aggregation needs at least one method result");
    if (static_cast<index_t>(results.size()) != method_weights.size()) {
        throw validation_error("method weight count does not match method result count");
    }
    check_simplex(method_weights, "method weights");
    const index_t n = results.front().ranks.size();
    for (const auto& r : results) {
        if (r.ranks.size() != n || r.scores.size() != n) {
            throw validation_error("method results disagree on plan count");
        }
    }

    RankReport<T> rep;
    rep.method_weights = method_weights;
    rep.borda_scores = vec_type<T>::Zero(n);
    for (std::size_t k = 0; k < results.size(); ++k) {
        rep.borda_scores += method_weights(k) * (T(n) - results[k].ranks);
    }

    const vec_type<T>* topsis = nullptr;
    for (const auto& r : results) {
        if (r.method == Method::topsis) { topsis = &r.scores; break; }
    }

    std::vector<index_t> order(n);
    std::iota(order.begin(), order.end(), index_t(0));
    const auto& bs = rep.borda_scores;
    std::stable_sort(order.begin(), order.end(), [&](index_t a, index_t b) { return bs(a) > bs(b); });
    for (index_t start = 0; start < n;) {
        index_t end = start + 1;
        while (end < n && std::abs(bs(order[start]) - bs(order[end])) <= score_tie_tol) ++end;
        std::sort(order.begin() + start, order.begin() + end, [&](index_t a, index_t b) {
            if (topsis && (*topsis)(a) != (*topsis)(b)) return (*topsis)(a) > (*topsis)(b);
            return a < b;
        });
        start = end;
    }
    rep.final_ranks.resize(n);
    for (index_t k = 0; k < n; ++k) rep.final_ranks(order[k]) = static_cast<int>(k + 1);

    rep.methods = std::move(results);
    return rep;
}

} // namespace greyrank
