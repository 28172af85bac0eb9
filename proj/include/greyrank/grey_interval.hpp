#pragma once
#include <cmath>
#include <iterator>
#include <ostream>
#include <string>
#include <greyrank/error.hpp>
#include <greyrank/types.hpp>

namespace greyrank {

/**
 * Closed interval grey number [lo, hi].
 *
 * Construction enforces lo <= hi and finiteness. Non-negativity is
 * not a type invariant; operations that need it (mul, div) check it.
 */
template <class ValueType>
class GreyInterval
{
public:
    using value_t = ValueType;

    GreyInterval() = default;

    GreyInterval(value_t lo, value_t hi)
        : lo_(lo), hi_(hi)
    {
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            throw validation_error("grey interval bounds must be finite");
        }
        if (lo > hi) {
            throw validation_error(
                "grey interval lower bound " + std::to_string(lo) +
                " exceeds upper bound " + std::to_string(hi)
            );
        }
    }

    static GreyInterval point(value_t v) { return GreyInterval(v, v); }

    value_t lo() const { return lo_; }
    value_t hi() const { return hi_; }
    value_t width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }
    bool non_negative() const { return lo_ >= 0; }

    friend bool operator==(const GreyInterval&, const GreyInterval&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GreyInterval& a)
    {
        return os << '[' << a.lo_ << ", " << a.hi_ << ']';
    }

private:
    value_t lo_ = 0;
    value_t hi_ = 0;
};

template <class T>
GreyInterval<T> make_interval(T lo, T hi) { return GreyInterval<T>(lo, hi); }

/// Euclidean distance between the (lo, hi) endpoint pairs.
template <class T>
T distance(const GreyInterval<T>& a, const GreyInterval<T>& b)
{
    const T dh = b.hi() - a.hi();
    const T dl = b.lo() - a.lo();
    return std::sqrt(dh * dh + dl * dl);
}

template <class T>
GreyInterval<T> add(const GreyInterval<T>& a, const GreyInterval<T>& b)
{
    return GreyInterval<T>(a.lo() + b.lo(), a.hi() + b.hi());
}

template <class T>
GreyInterval<T> scale(const GreyInterval<T>& a, T c)
{
    if (!(c >= 0)) throw validation_error("interval scale factor must be non-negative");
    return GreyInterval<T>(c * a.lo(), c * a.hi());
}

template <class T>
GreyInterval<T> mul(const GreyInterval<T>& a, const GreyInterval<T>& b)
{
    if (!a.non_negative() || !b.non_negative()) {
        throw validation_error("interval product requires non-negative operands");
    }
    return GreyInterval<T>(a.lo() * b.lo(), a.hi() * b.hi());
}

template <class T>
GreyInterval<T> div_by_scalar_interval(const GreyInterval<T>& a, const GreyInterval<T>& s)
{
    if (!a.non_negative()) {
        throw validation_error("interval quotient requires a non-negative dividend");
    }
    if (!(s.lo() > 0)) {
        throw degenerate_error("interval divisor must be strictly positive");
    }
    return GreyInterval<T>(a.lo() / s.hi(), a.hi() / s.lo());
}

template <class T> GreyInterval<T> operator+(const GreyInterval<T>& a, const GreyInterval<T>& b) { return add(a, b); }
template <class T> GreyInterval<T> operator*(const GreyInterval<T>& a, const GreyInterval<T>& b) { return mul(a, b); }
template <class T> GreyInterval<T> operator/(const GreyInterval<T>& a, const GreyInterval<T>& s) { return div_by_scalar_interval(a, s); }

/**
 * Dense array of grey intervals stored as two same-shaped Eigen arrays
 * of lower and upper bounds. Column vectors of intervals use Cols_ = 1.
 *
 * Bounds are public so that column/row reductions can be written as
 * plain Eigen expressions on `lo` and `hi`.
 */
template <class ValueType, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
struct IntervalArray
{
    using value_t = ValueType;
    using bound_t = array_type<value_t, Rows_, Cols_>;

    bound_t lo;
    bound_t hi;

    IntervalArray() = default;

    IntervalArray(index_t rows, index_t cols)
        : lo(bound_t::Zero(rows, cols)), hi(bound_t::Zero(rows, cols))
    {}

    template <class LoExpr, class HiExpr>
    IntervalArray(const Eigen::ArrayBase<LoExpr>& lo_, const Eigen::ArrayBase<HiExpr>& hi_)
        : lo(lo_), hi(hi_)
    {
        if (lo.rows() != hi.rows() || lo.cols() != hi.cols()) {
            throw validation_error("interval bound arrays differ in shape");
        }
    }

    index_t rows() const { return lo.rows(); }
    index_t cols() const { return lo.cols(); }
    index_t size() const { return lo.size(); }

    GreyInterval<value_t> operator()(index_t i, index_t j) const { return {lo(i, j), hi(i, j)}; }
    GreyInterval<value_t> operator[](index_t i) const { return {lo(i), hi(i)}; }

    void set(index_t i, index_t j, const GreyInterval<value_t>& v) { lo(i, j) = v.lo(); hi(i, j) = v.hi(); }
    void set(index_t i, const GreyInterval<value_t>& v) { lo(i) = v.lo(); hi(i) = v.hi(); }

    bool ordered() const { return (lo <= hi).all() && lo.allFinite() && hi.allFinite(); }
    bool non_negative() const { return (lo >= 0).all(); }
};

template <class T> using IntervalMatrix = IntervalArray<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T> using IntervalVector = IntervalArray<T, Eigen::Dynamic, 1>;

/// Elementwise grey distance between two same-shaped interval arrays.
template <class T, int R, int C>
array_type<T, R, C> distance(const IntervalArray<T, R, C>& a, const IntervalArray<T, R, C>& b)
{
    return ((b.hi - a.hi).square() + (b.lo - a.lo).square()).sqrt();
}

/// Componentwise [min, max] envelope of a set of equal-length crisp vectors.
template <class T, class Range>
IntervalVector<T> interval_envelope(const Range& vectors)
{
    auto it = std::begin(vectors);
    if (it == std::end(vectors)) {
        throw validation_error("interval envelope of an empty set");
    }
    vec_type<T> lo = *it;
    vec_type<T> hi = *it;
    for (++it; it != std::end(vectors); ++it) {
        if (it->size() != lo.size()) {
            throw validation_error("interval envelope over vectors of different length");
        }
        lo = lo.min(*it);
        hi = hi.max(*it);
    }
    return {lo, hi};
}

} // namespace greyrank
