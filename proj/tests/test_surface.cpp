#include "kinstab/errors.hpp"
#include "kinstab/surface.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace kinstab;
using test::R;

TEST_CASE("validate: index and structural invariants") {
    CHECK(validate({{1, 3, 3, 4}, 9}) == 2);
    CHECK(validate({{1, 6, 9, 13}, 27}) == 2);
    CHECK(validate({{1, 1, 1, 1}, 3}) == 1);
    CHECK(validate({{1, 9, 15, 22}, 45}) == 2);

    CHECK_THROWS_AS(validate({{3, 1, 3, 4}, 9}), UnsortedWeights);
    CHECK_THROWS_AS(validate({{1, 1, 1, 1}, 5}), NonPositiveIndex);
    // the triple (2,4,4) shares the factor 2
    CHECK_THROWS_AS(validate({{1, 2, 4, 4}, 8}), NotWellFormed);
    // gcd(2,4) = 2 does not divide 9
    CHECK_THROWS_AS(validate({{1, 2, 3, 4}, 9}), NotWellFormed);
    CHECK_THROWS_AS(validate({{0, 1, 1, 1}, 1}), NotWellFormed);
}

TEST_CASE("hyperplane and anticanonical squares") {
    CHECK(hyperplane_square({{1, 3, 3, 4}, 9}) == R("1/4"));
    CHECK(hyperplane_square({{1, 1, 1, 1}, 3}) == R("3"));
    CHECK(antican_square({{1, 3, 3, 4}, 9}) == R("1"));

    for (long long n = 0; n <= 10; ++n) {
        SurfaceSpec family{{1, 3, 3 * n + 4, 3 * n + 5}, 6 * n + 11};
        CHECK(hyperplane_square(family) ==
              Rational(6 * n + 11, 3 * (3 * n + 4) * (3 * n + 5)));
        CHECK(antican_square(family) ==
              Rational(4 * (6 * n + 11), 3 * (3 * n + 4) * (3 * n + 5)));
    }
    for (long long n = 0; n <= 6; ++n)
        for (long long m = n; m <= 6; ++m) {
            SurfaceSpec family{{1, 1, n + 1, m + 1}, n + m + 2};
            CHECK(antican_square(family) == Rational(4 * (n + m + 2), (n + 1) * (m + 1)));
            // antican_square = I^2 hyperplane_square with I = 2
            CHECK(antican_square(family) == Rational(4) * hyperplane_square(family));
        }
}

TEST_CASE("quotient point normalization") {
    CHECK(normalize_quotient(4, {1, 1}).local_weights == std::array<long long, 2>{1, 1});
    CHECK(normalize_quotient(8, {3, 7}).local_weights == std::array<long long, 2>{1, 5});
    for (long long m = 1; m <= 12; ++m)
        CHECK(normalize_quotient(m + 1, {1, 1}).local_weights == std::array<long long, 2>{1, 1});

    SUBCASE("idempotent") {
        for (long long m : {4, 8, 13, 22}) {
            auto p = normalize_quotient(m, {3, m - 1});
            auto again = normalize_quotient(p.order, p.local_weights);
            CHECK(p.local_weights == again.local_weights);
        }
    }
    SUBCASE("raw and normalized weights differ by a unit") {
        long long m = 13;
        std::array<long long, 2> raw{6, 9};
        auto p = normalize_quotient(m, raw);
        // exhibit the unit: u = 6^{-1} mod 13
        long long unit = 0;
        for (long long u = 1; u < m; ++u)
            if (u * raw[0] % m == 1) unit = u;
        REQUIRE(unit != 0);
        CHECK(unit * raw[0] % m == p.local_weights[0]);
        CHECK(unit * raw[1] % m == p.local_weights[1]);
    }
    SUBCASE("smooth point convention") {
        auto p = normalize_quotient(1, {1, 1});
        CHECK(p.order == 1);
        CHECK(p.local_weights == std::array<long long, 2>{1, 1});
    }

    CHECK_THROWS_AS(normalize_quotient(4, {2, 1}), NotCoprime);
    CHECK_THROWS_AS(normalize_quotient(9, {3, 1}), NotCoprime);
    CHECK_THROWS_AS(normalize_quotient(0, {1, 1}), BadParameters);
}

TEST_CASE("section counts") {
    SurfaceSpec s9{{1, 3, 3, 4}, 9};
    CHECK(h0_count(s9, 0) == 1);
    CHECK(h0_count(s9, 1) == 1); // only x
    CHECK(h0_count(s9, 3) == 3); // x^3, y, z
    CHECK(h0_count(s9, 4) == 4); // x^4, xy, xz, t
    CHECK_THROWS_AS(h0_count(s9, -1), BadParameters);

    SUBCASE("quadratic growth recovers O(1)^2 within 5 percent at k = 720") {
        struct Case {
            SurfaceSpec spec;
        };
        for (const SurfaceSpec& spec :
             {SurfaceSpec{{1, 3, 3, 4}, 9}, SurfaceSpec{{1, 6, 9, 13}, 27},
              SurfaceSpec{{1, 9, 15, 22}, 45}, SurfaceSpec{{1, 3, 6, 7}, 15},
              SurfaceSpec{{1, 1, 1, 2}, 3}, SurfaceSpec{{1, 3, 7, 8}, 17}}) {
            long long k = 720;
            Rational ratio(2 * h0_count(spec, k), k * k);
            Rational target = hyperplane_square(spec);
            CHECK(abs(ratio - target) <= Rational(1, 20) * target);
        }
    }
}
