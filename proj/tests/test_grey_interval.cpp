#include <doctest.h>
#include <greyrank/grey_interval.hpp>
#include "test_support.hpp"

using namespace greyrank;
using namespace greyrank::testing;

TEST_CASE("make_interval")
{
    const auto a = make_interval(1.0, 3.0);
    CHECK(a.lo() == 1.0);
    CHECK(a.hi() == 3.0);

    const auto p = make_interval(2.0, 2.0);
    CHECK(p.is_point());
    CHECK(p.width() == 0.0);

    CHECK_THROWS_AS(make_interval(3.0, 1.0), validation_error);
    CHECK_THROWS_AS(make_interval(std::nan(""), 1.0), validation_error);
    CHECK_THROWS_AS(make_interval(0.0, std::numeric_limits<double>::infinity()), validation_error);
}

TEST_CASE("distance examples")
{
    CHECK(distance(make_interval(1.0, 2.0), make_interval(1.0, 2.0)) == 0.0);
    CHECK(distance(make_interval(0.0, 0.0), make_interval(3.0, 4.0)) == doctest::Approx(5.0).epsilon(1e-15));

    // normalized reference cells x11 = [6/39, 8/31], x21 = [7/39, 9/31];
    // expected value evaluated independently in numpy
    const GreyInterval<double> x11(6.0 / 39, 8.0 / 31);
    const GreyInterval<double> x21(7.0 / 39, 9.0 / 31);
    CHECK(std::abs(distance(x11, x21) - 0.041207340635504235) < 1e-15);
}

TEST_CASE("arithmetic examples")
{
    CHECK(add(make_interval(1.0, 2.0), make_interval(3.0, 4.0)) == make_interval(4.0, 6.0));
    CHECK(mul(make_interval(0.0, 0.0), make_interval(5.0, 9.0)) == make_interval(0.0, 0.0));
    CHECK(div_by_scalar_interval(make_interval(1.0, 2.0), make_interval(2.0, 4.0)) == make_interval(0.25, 1.0));
    CHECK(scale(make_interval(1.0, 2.0), 3.0) == make_interval(3.0, 6.0));
    CHECK(make_interval(1.0, 2.0) + make_interval(1.0, 1.0) == make_interval(2.0, 3.0));
}

TEST_CASE("arithmetic error paths")
{
    CHECK_THROWS_AS(mul(make_interval(-1.0, 2.0), make_interval(1.0, 2.0)), validation_error);
    CHECK_THROWS_AS(div_by_scalar_interval(make_interval(1.0, 2.0), make_interval(0.0, 2.0)), degenerate_error);
    CHECK_THROWS_AS(div_by_scalar_interval(make_interval(-1.0, 2.0), make_interval(1.0, 2.0)), validation_error);
    CHECK_THROWS_AS(scale(make_interval(1.0, 2.0), -1.0), validation_error);
}

TEST_CASE("distance is a metric on random intervals")
{
    rng_t rng(20240101);
    for (int t = 0; t < 10000; ++t) {
        const auto a = random_interval(rng, -5, 5);
        const auto b = random_interval(rng, -5, 5);
        const auto c = random_interval(rng, -5, 5);
        REQUIRE(distance(a, b) == distance(b, a));
        REQUIRE(distance(a, a) == 0.0);
        REQUIRE((distance(a, b) == 0.0) == (a == b));
        REQUIRE(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
}

TEST_CASE("non-negative arithmetic keeps ordering and mul is monotone")
{
    rng_t rng(7);
    for (int t = 0; t < 2000; ++t) {
        const auto a = random_interval(rng, 0, 10);
        const auto b = random_interval(rng, 0, 10);
        const auto s = random_interval(rng, 0.1, 10);
        const auto p = mul(a, b);
        CHECK(p.lo() <= p.hi());
        const auto q = div_by_scalar_interval(a, s);
        CHECK(q.lo() <= q.hi());

        // widen a on both sides (staying non-negative)
        const GreyInterval<double> wide(a.lo() * uniform(rng, 0, 1), a.hi() + uniform(rng, 0, 2));
        const auto pw = mul(wide, b);
        CHECK(pw.lo() <= p.lo());
        CHECK(pw.hi() >= p.hi());
    }
}

TEST_CASE("interval array distance agrees with scalar distance")
{
    rng_t rng(3);
    const auto a = random_interval_matrix(rng, 4, 3);
    const auto b = random_interval_matrix(rng, 4, 3);
    const array_type<double> d = distance(a, b);
    for (index_t i = 0; i < 4; ++i) {
        for (index_t j = 0; j < 3; ++j) CHECK(d(i, j) == distance(a(i, j), b(i, j)));
    }
    CHECK(a.ordered());

    IntervalMatrix<double> bad(1, 1);
    bad.lo(0, 0) = 2;
    bad.hi(0, 0) = 1;
    CHECK_FALSE(bad.ordered());
}

TEST_CASE("interval envelope")
{
    const std::vector<vec_type<double>> v = {vec<3>({0.2, 0.5, 0.3}), vec<3>({0.4, 0.1, 0.5})};
    const auto env = interval_envelope<double>(v);
    CHECK(env[0] == make_interval(0.2, 0.4));
    CHECK(env[1] == make_interval(0.1, 0.5));
    CHECK(env[2] == make_interval(0.3, 0.5));

    const std::vector<vec_type<double>> empty;
    CHECK_THROWS_AS(interval_envelope<double>(empty), validation_error);
    const std::vector<vec_type<double>> ragged = {vec<2>({1, 2}), vec<3>({1, 2, 3})};
    CHECK_THROWS_AS(interval_envelope<double>(ragged), validation_error);
}
