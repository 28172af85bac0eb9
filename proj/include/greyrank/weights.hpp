#pragma once
#include <array>
#include <cmath>
#include <span>
#include <vector>
#include <greyrank/grey_interval.hpp>
#include <greyrank/trace.hpp>

namespace greyrank {

/**
 * Pairwise comparison matrix from one expert.
 * Positive entries, unit diagonal, reciprocal within 1e-9.
 */
template <class ValueType>
class JudgmentMatrix
{
public:
    using value_t = ValueType;
    using matrix_t = matrix_type<value_t>;

    static constexpr value_t reciprocal_tol = 1e-9;
    static constexpr index_t max_order = 10;

    JudgmentMatrix() = default;

    explicit JudgmentMatrix(matrix_t entries)
        : entries_(std::move(entries))
    {
        const auto m = entries_.rows();
        if (m != entries_.cols()) throw validation_error("judgment matrix must be square");
        if (m < 1) throw validation_error("judgment matrix is empty");
        if (m > max_order) {
            throw validation_error("judgment matrix order exceeds the random-index table (max 10)");
        }
        if (!entries_.allFinite() || !(entries_.array() > 0).all()) {
            throw validation_error("judgment matrix entries must be finite and positive");
        }
        for (index_t i = 0; i < m; ++i) {
            if (entries_(i, i) != 1) throw validation_error("judgment matrix diagonal must be 1");
            for (index_t j = i + 1; j < m; ++j) {
                if (std::abs(entries_(i, j) * entries_(j, i) - 1) > reciprocal_tol) {
                    throw validation_error(
                        "judgment matrix is not reciprocal at (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")"
                    );
                }
            }
        }
    }

    const matrix_t& entries() const { return entries_; }
    index_t order() const { return entries_.rows(); }

private:
    matrix_t entries_;
};

// Saaty random consistency index, orders 1..10.
inline constexpr std::array<double, 10> random_index = {
    0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49
};

template <class ValueType>
struct AhpResult
{
    vec_type<ValueType> weights;
    ValueType lambda_max = 0;
    ValueType consistency_index = 0;
    ValueType consistency_ratio = 0;
    int iterations = 0;
};

struct PowerIterationOptions
{
    double tol = 1e-12;
    int max_iters = 10000;
};

inline constexpr double consistency_warning_threshold = 0.1;

/**
 * Principal right eigenvector of a judgment matrix by power iteration,
 * normalized to sum 1, with lambda_max and the consistency ratio.
 *
 * Iteration starts from the normalized row geometric means and stops
 * when successive iterates differ by less than `opts.tol` in max-norm.
 */
template <class T>
AhpResult<T> ahp_priority(const JudgmentMatrix<T>& judgment, const PowerIterationOptions& opts = {})
{
    const auto& a = judgment.entries();
    const index_t m = judgment.order();

    AhpResult<T> out;
    if (m == 1) {
        out.weights = vec_type<T>::Ones(1);
        out.lambda_max = 1;
        return out;
    }

    vec_type<T> w = a.array().log().rowwise().mean().exp();
    w /= w.sum();

    bool converged = false;
    vec_type<T> next(m);
    for (int it = 1; it <= opts.max_iters; ++it) {
        next = (a * w.matrix()).array();
        const T s = next.sum();
        next /= s;
        const T step = (next - w).abs().maxCoeff();
        w.swap(next);
        out.iterations = it;
        if (step < opts.tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw degenerate_error("AHP power iteration did not converge");
    }

    // w sums to 1, so the Rayleigh-type estimate sum(Aw) is lambda_max.
    out.lambda_max = (a * w.matrix()).sum();
    out.weights = std::move(w);
    out.consistency_index = (out.lambda_max - m) / (m - 1);
    const T ri = random_index[m - 1];
    out.consistency_ratio = ri > 0 ? out.consistency_index / ri : T(0);
    return out;
}

/// [min, max] over experts of each attribute's AHP weight.
template <class T>
IntervalVector<T> subjective_interval_weights(std::span<const JudgmentMatrix<T>> experts)
{
    if (experts.empty()) throw validation_error("at least one expert judgment matrix is required");
    std::vector<vec_type<T>> priorities;
    priorities.reserve(experts.size());
    for (const auto& e : experts) {
        if (e.order() != experts.front().order()) {
            throw validation_error("expert judgment matrices differ in order");
        }
        priorities.push_back(ahp_priority(e).weights);
    }
    return interval_envelope<T>(priorities);
}

/// Total pairwise grey distance sum_i sum_k d(x_ij, x_kj) per column.
template <class T>
vec_type<T> column_deviation(const IntervalMatrix<T>& x)
{
    const index_t n = x.rows();
    vec_type<T> mass(x.cols());
    for (index_t j = 0; j < x.cols(); ++j) {
        const auto dl = x.lo.col(j).replicate(1, n) - x.lo.col(j).transpose().replicate(n, 1);
        const auto dh = x.hi.col(j).replicate(1, n) - x.hi.col(j).transpose().replicate(n, 1);
        mass(j) = (dl.square() + dh.square()).sqrt().sum();
    }
    return mass;
}

namespace detail {

// Maximizer of sum_j mass_j * beta_j over the non-negative unit sphere.
template <class T>
vec_type<T> deviation_sphere_weights(const IntervalMatrix<T>& x)
{
    const vec_type<T> mass = column_deviation(x);
    const T norm = mass.matrix().norm();
    if (!(norm > 0)) throw degenerate_error("objective weights undefined: zero total deviation");
    return mass / norm;
}

} // namespace detail

/**
 * Deviation-maximizing objective weights, normalized onto the simplex.
 * Throws degenerate_error when every column is constant.
 */
template <class T>
vec_type<T> objective_opt_weights(const IntervalMatrix<T>& x)
{
    const vec_type<T> sphere = detail::deviation_sphere_weights(x);
    return sphere / sphere.sum();
}

inline constexpr double entropy_spread_tol = 1e-12;

/**
 * Entropy weights of one bound array (n x m): p_ij = v_ij / sum_i v_ij,
 * E_j = -sum_i p ln p / ln n with 0 ln 0 = 0, weights (1 - E_j) / sum(1 - E).
 */
template <class T, class Derived>
vec_type<T> entropy_weights(const Eigen::ArrayBase<Derived>& values)
{
    const index_t n = values.rows();
    const index_t m = values.cols();
    if (n < 2) throw validation_error("entropy weights need at least 2 plans");
    const T k = T(1) / std::log(static_cast<T>(n));

    vec_type<T> eta(m);
    for (index_t j = 0; j < m; ++j) {
        const T s = values.col(j).sum();
        if (!(s > 0)) throw degenerate_error("entropy weights undefined: column with zero bound sum");
        T h = 0;
        for (index_t i = 0; i < n; ++i) {
            const T p = values(i, j) / s;
            if (p > 0) h -= p * std::log(p);
        }
        eta(j) = std::max(T(0), T(1) - k * h);
    }
    const T total = eta.sum();
    if (!(total > entropy_spread_tol)) {
        throw degenerate_error("entropy weights undefined: every column is uniform");
    }
    return eta / total;
}

template <class T>
struct EntropyWeights
{
    vec_type<T> lower;
    vec_type<T> upper;
};

template <class T>
EntropyWeights<T> entropy_bound_weights(const IntervalMatrix<T>& x)
{
    return {entropy_weights<T>(x.lo), entropy_weights<T>(x.hi)};
}

/// Componentwise min/max envelope of the three objective weight vectors.
template <class T>
IntervalVector<T> comprehensive_objective(
    const vec_type<T>& opt,
    const vec_type<T>& ent_lo,
    const vec_type<T>& ent_hi
)
{
    const std::array<vec_type<T>, 3> all = {opt, ent_lo, ent_hi};
    return interval_envelope<T>(all);
}

/**
 * w_j = alpha_j * beta_j / sum_k alpha_k * beta_k under non-negative
 * interval arithmetic: the denominator is the interval sum of the
 * products, so w_j = [num_j.lo / den.hi, num_j.hi / den.lo].
 */
template <class T>
IntervalVector<T> final_weights(const IntervalVector<T>& subjective, const IntervalVector<T>& objective)
{
    if (subjective.size() != objective.size()) {
        throw validation_error("subjective and objective weights differ in length");
    }
    if (!subjective.non_negative() || !objective.non_negative()) {
        throw validation_error("weight intervals must be non-negative");
    }
    const vec_type<T> num_lo = subjective.lo * objective.lo;
    const vec_type<T> num_hi = subjective.hi * objective.hi;
    const T den_lo = num_lo.sum();
    const T den_hi = num_hi.sum();
    if (!(den_lo > 0)) throw degenerate_error("final weights undefined: zero denominator lower bound");
    return {num_lo / den_hi, num_hi / den_lo};
}

template <class T>
struct WeightBundle
{
    IntervalVector<T> subjective;
    vec_type<T> objective_opt;
    vec_type<T> entropy_lo;
    vec_type<T> entropy_hi;
    IntervalVector<T> objective;
    IntervalVector<T> final;
    std::vector<AhpResult<T>> ahp;
};

/**
 * Full three-source weighting. Degenerate objective sources fall back
 * to uniform 1/m and an event is appended to `trace`; CR above 0.1 is
 * recorded as a warning.
 */
template <class T>
WeightBundle<T> compute_weight_bundle(
    const IntervalMatrix<T>& x,
    std::span<const JudgmentMatrix<T>> experts,
    Trace& trace
)
{
    const index_t m = x.cols();
    if (experts.empty()) throw validation_error("at least one expert judgment matrix is required");

    WeightBundle<T> b;
    std::vector<vec_type<T>> priorities;
    for (std::size_t l = 0; l < experts.size(); ++l) {
        if (experts[l].order() != m) {
            throw validation_error("expert " + std::to_string(l) + " judgment matrix order does not match attribute count");
        }
        auto r = ahp_priority(experts[l]);
        if (r.consistency_ratio > consistency_warning_threshold) {
            trace.push_back({"ahp_inconsistent",
                "expert " + std::to_string(l) + " consistency ratio " +
                std::to_string(r.consistency_ratio) + " exceeds 0.1"});
        }
        priorities.push_back(r.weights);
        b.ahp.push_back(std::move(r));
    }
    b.subjective = interval_envelope<T>(priorities);

    const vec_type<T> uniform = vec_type<T>::Constant(m, T(1) / m);
    try {
        b.objective_opt = objective_opt_weights(x);
    } catch (const degenerate_error& e) {
        b.objective_opt = uniform;
        trace.push_back({"objective_opt_uniform", std::string(e.what()) + "; using uniform 1/m"});
    }
    try {
        b.entropy_lo = entropy_weights<T>(x.lo);
    } catch (const degenerate_error& e) {
        b.entropy_lo = uniform;
        trace.push_back({"entropy_lower_uniform", std::string(e.what()) + " (lower bounds); using uniform 1/m"});
    }
    try {
        b.entropy_hi = entropy_weights<T>(x.hi);
    } catch (const degenerate_error& e) {
        b.entropy_hi = uniform;
        trace.push_back({"entropy_upper_uniform", std::string(e.what()) + " (upper bounds); using uniform 1/m"});
    }
    b.objective = comprehensive_objective<T>(b.objective_opt, b.entropy_lo, b.entropy_hi);
    b.final = final_weights(b.subjective, b.objective);
    return b;
}

} // namespace greyrank
