#pragma once
#include <set>
#include <string>
#include <vector>
#include <greyrank/grey_interval.hpp>

namespace greyrank {

enum class AttributeKind
{
    cost,
    effect
};

struct AttributeSpec
{
    std::string name;
    AttributeKind kind = AttributeKind::effect;

    friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/**
 * Raw n x m interval decision matrix: rows are plans, columns are
 * attributes. Cells must satisfy 0 <= lo <= hi; cost columns further
 * need lo > 0 since reciprocals are taken.
 */
template <class ValueType>
struct DecisionMatrix
{
    using value_t = ValueType;

    std::vector<std::string> plans;
    std::vector<AttributeSpec> attributes;
    IntervalMatrix<value_t> cells;

    index_t n_plans() const { return cells.rows(); }
    index_t n_attributes() const { return cells.cols(); }

    void validate() const
    {
        if (cells.rows() < 2) throw validation_error("decision matrix needs at least 2 plans");
        if (cells.cols() < 1) throw validation_error("decision matrix needs at least 1 attribute");
        if (static_cast<index_t>(plans.size()) != cells.rows()) {
            throw validation_error("plan names do not match decision matrix rows");
        }
        if (static_cast<index_t>(attributes.size()) != cells.cols()) {
            throw validation_error("attribute specs do not match decision matrix columns");
        }
        std::set<std::string> names;
        for (const auto& a : attributes) {
            if (!names.insert(a.name).second) {
                throw validation_error("duplicate attribute name '" + a.name + "'");
            }
        }
        for (index_t j = 0; j < cells.cols(); ++j) {
            for (index_t i = 0; i < cells.rows(); ++i) {
                const auto where = "cell (" + plans[i] + ", " + attributes[j].name + ")";
                if (!std::isfinite(cells.lo(i, j)) || !std::isfinite(cells.hi(i, j))) {
                    throw validation_error(where + " is not finite");
                }
                if (cells.lo(i, j) > cells.hi(i, j)) {
                    throw validation_error(where + " has lower bound above upper bound");
                }
                if (cells.lo(i, j) < 0) {
                    throw validation_error(where + " is negative");
                }
                if (attributes[j].kind == AttributeKind::cost && !(cells.lo(i, j) > 0)) {
                    throw validation_error(where + " has zero lower bound in a cost column");
                }
            }
        }
    }
};

namespace detail {

template <class T, class Col>
T sequential_sum(const Col& col)
{
    T s = 0;
    for (index_t i = 0; i < col.size(); ++i) s += col(i);
    return s;
}

} // namespace detail

/**
 * Ratio normalization of one column.
 *
 * Effect: [lo_i / sum(hi), hi_i / sum(lo)].
 * Cost:   [(1/hi_i) / sum(1/lo), (1/lo_i) / sum(1/hi)].
 *
 * Results are not clamped to [0, 1]; wide intervals can push the upper
 * bound past 1.
 */
template <class T, class LoCol, class HiCol>
std::pair<vec_type<T>, vec_type<T>> normalize_column(
    const Eigen::ArrayBase<LoCol>& lo,
    const Eigen::ArrayBase<HiCol>& hi,
    AttributeKind kind
)
{
    if (kind == AttributeKind::effect) {
        const T sum_hi = detail::sequential_sum<T>(hi);
        const T sum_lo = detail::sequential_sum<T>(lo);
        if (!(sum_hi > 0) || !(sum_lo > 0)) {
            throw degenerate_error("effect column has zero bound sum");
        }
        return {lo / sum_hi, hi / sum_lo};
    }
    if (!(lo > 0).all()) {
        throw validation_error("cost column has zero lower bound");
    }
    const vec_type<T> inv_lo = lo.inverse();
    const vec_type<T> inv_hi = hi.inverse();
    const T sum_inv_lo = detail::sequential_sum<T>(inv_lo);
    const T sum_inv_hi = detail::sequential_sum<T>(inv_hi);
    return {inv_hi / sum_inv_lo, inv_lo / sum_inv_hi};
}

template <class T>
IntervalMatrix<T> normalize_matrix(const DecisionMatrix<T>& raw)
{
    raw.validate();
    IntervalMatrix<T> x(raw.n_plans(), raw.n_attributes());
    for (index_t j = 0; j < raw.n_attributes(); ++j) {
        auto [lo, hi] = normalize_column<T>(
            raw.cells.lo.col(j), raw.cells.hi.col(j), raw.attributes[j].kind
        );
        x.lo.col(j) = lo;
        x.hi.col(j) = hi;
    }
    return x;
}

} // namespace greyrank
