#include "kinstab/errors.hpp"
#include "kinstab/lct.hpp"
#include "kinstab/scenario.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace kinstab;
using test::R;

namespace {

struct AlphaCase {
    Scenario scenario;
    QuotientPoint point;
    BoundaryDivisor divisor;
};

AlphaCase alpha_case(const std::string& name, long long n = -1) {
    AlphaCase c;
    c.scenario = make_preset(name, n);
    c.point = scenario_point(c.scenario, "p_t");
    c.divisor = scenario_boundary(c.scenario);
    return c;
}

// the bound must be reproducible from its own witness
void check_witnessed(const BoundaryDivisor& divisor, const QuotientPoint& point,
                     const Rational& bound, const LctWitness& w) {
    REQUIRE(w.kind == LctWitness::Kind::PointValuation);
    REQUIRE(w.point == point.label);
    Rational denom;
    for (const auto& comp : divisor.components) {
        auto it = comp.germs.find(point.label);
        if (it == comp.germs.end()) continue;
        denom += comp.multiplicity * Rational(it->second.weighted_order(w.weights));
    }
    CHECK(Rational(w.weights[0] + w.weights[1]) / denom == bound);
}

} // namespace

TEST_CASE("point bounds for the three hyperplane sections") {
    SUBCASE("degree 27 surface") {
        AlphaCase c = alpha_case("s27");
        CHECK(c.point.local_weights == std::array<long long, 2>{1, 8});
        auto [bound, w] = lct_ub_at_point(c.point, c.divisor);
        CHECK(bound == R("5/9"));
        check_witnessed(c.divisor, c.point, bound, w);
        // the ambient weight vector (6,9) lies on the minimizing ray
        MonomialGerm z({{0, 1}}), branch({{0, 2}, {3, 0}});
        CHECK(Rational(6 + 9) /
                  Rational(z.weighted_order({6, 9}) + branch.weighted_order({6, 9})) ==
              R("5/9"));
    }
    SUBCASE("degree 45 surface") {
        AlphaCase c = alpha_case("s45");
        CHECK(c.point.local_weights == std::array<long long, 2>{1, 9});
        auto [bound, w] = lct_ub_at_point(c.point, c.divisor);
        CHECK(bound == R("8/15"));
        check_witnessed(c.divisor, c.point, bound, w);
        MonomialGerm branch({{0, 3}, {5, 0}});
        CHECK(Rational(9 + 15) / Rational(branch.weighted_order({9, 15})) == R("8/15"));
    }
    SUBCASE("degree 6n+9 family") {
        for (long long n = 0; n <= 20; ++n) {
            AlphaCase c = alpha_case("fam-6n9", n);
            auto [bound, w] = lct_ub_at_point(c.point, c.divisor);
            CHECK(bound == Rational(n + 2, 2 * n + 3));
            check_witnessed(c.divisor, c.point, bound, w);
        }
    }
}

TEST_CASE("candidate search matches the exhaustive scan") {
    auto scan_box = [](const BoundaryDivisor& divisor, long long m) {
        long long max_exp = 1;
        for (const auto& comp : divisor.components)
            for (const auto& [label, germ] : comp.germs)
                for (const auto& mo : germ.monomials())
                    max_exp = std::max({max_exp, mo[0], mo[1]});
        return 4 * max_exp * m;
    };
    for (const auto& [name, n] :
         std::vector<std::pair<std::string, long long>>{{"s27", -1}, {"s45", -1}, {"fam-6n9", 0},
                                                        {"fam-6n9", 1}, {"fam-6n9", 2},
                                                        {"fam-6n9", 5}, {"fam-6n9", 6}}) {
        AlphaCase c = alpha_case(name, n);
        auto [bound, w] = lct_ub_at_point(c.point, c.divisor);
        auto [scanned, sw] = lct_ub_scan(c.point, c.divisor, scan_box(c.divisor, c.point.order));
        CHECK(bound == scanned);
    }
}

TEST_CASE("overall bound combines component and point bounds") {
    SUBCASE("the hyperplane sections are dominated by the point bound") {
        AlphaCase c = alpha_case("s27");
        auto [bound, w] = lct_ub(c.divisor, {c.point});
        CHECK(bound == R("5/9"));
        CHECK(w.kind == LctWitness::Kind::PointValuation);
    }
    SUBCASE("a heavy component with no points gives 1/mult") {
        BoundaryDivisor d;
        d.components.push_back({R("2"), {}});
        auto [bound, w] = lct_ub(d, {});
        CHECK(bound == R("1/2"));
        CHECK(w.kind == LctWitness::Kind::ComponentMultiplicity);
        CHECK(w.component == 0);
    }
    SUBCASE("degree 6n+9 family at n = 1") {
        AlphaCase c = alpha_case("fam-6n9", 1);
        auto [bound, w] = lct_ub(c.divisor, {c.point});
        CHECK(bound == R("3/5"));
    }
}

TEST_CASE("bounds scale and are monotone under extra data") {
    AlphaCase c = alpha_case("s27");
    auto [bound, w] = lct_ub(c.divisor, {c.point});

    SUBCASE("scaling the divisor divides the bound") {
        for (const Rational& scale : {R("2"), R("3/2"), R("1/3")}) {
            BoundaryDivisor scaled = c.divisor;
            for (auto& comp : scaled.components) comp.multiplicity *= scale;
            auto [scaled_bound, sw] = lct_ub(scaled, {c.point});
            CHECK(scaled_bound == bound / scale);
        }
    }
    SUBCASE("adding a candidate point never raises the bound") {
        BoundaryDivisor with_extra = c.divisor;
        // mark a smooth point on the first component with a transverse branch
        with_extra.components[0].germs["p_s"] = MonomialGerm({{1, 0}});
        QuotientPoint smooth = normalize_quotient(1, {1, 1}, "p_s");
        auto [two_points, tw] = lct_ub(with_extra, {c.point, smooth});
        auto [one_point, ow] = lct_ub(with_extra, {c.point});
        CHECK(two_points <= one_point);
    }
    SUBCASE("dominated monomials leave the bound unchanged") {
        BoundaryDivisor fat = c.divisor;
        auto germ = fat.components[1].germs["p_t"].monomials();
        germ.push_back({4, 4});
        germ.push_back({0, 9});
        fat.components[1].germs["p_t"] = MonomialGerm(germ);
        auto [fat_bound, fw] = lct_ub(fat, {c.point});
        CHECK(fat_bound == bound);
    }
}

TEST_CASE("alpha verdicts") {
    SUBCASE("degree 27") {
        AlphaCase c = alpha_case("s27");
        AlphaReport rep = alpha_verdict(c.scenario.surface, c.divisor, {c.point});
        CHECK(rep.lct_bound == R("5/9"));
        CHECK(rep.alpha_bound == R("5/18"));
        CHECK(rep.delta_bound == R("5/6"));
        CHECK(rep.verdict == Verdict::NotKSemistable);
    }
    SUBCASE("degree 45") {
        AlphaCase c = alpha_case("s45");
        AlphaReport rep = alpha_verdict(c.scenario.surface, c.divisor, {c.point});
        CHECK(rep.lct_bound == R("8/15"));
        CHECK(rep.alpha_bound == R("4/15"));
        CHECK(rep.delta_bound == R("4/5"));
        CHECK(rep.verdict == Verdict::NotKSemistable);
    }
    SUBCASE("degree 9 boundary case stays inconclusive") {
        AlphaCase c = alpha_case("fam-6n9", 0);
        AlphaReport rep = alpha_verdict(c.scenario.surface, c.divisor, {c.point});
        CHECK(rep.lct_bound == R("2/3"));
        CHECK(rep.delta_bound == R("1"));
        CHECK(rep.verdict == Verdict::Inconclusive);
    }
    SUBCASE("first weight must be 1") {
        BoundaryDivisor d;
        d.components.push_back({R("1"), {}});
        CHECK_THROWS_AS(alpha_verdict({{2, 3, 5, 9}, 18}, d, {}), NonUnitFirstWeight);
    }
}

TEST_CASE("missing germ data is rejected") {
    AlphaCase c = alpha_case("s27");
    BoundaryDivisor none;
    none.components.push_back({R("1"), {}});
    CHECK_THROWS_AS(lct_ub_at_point(c.point, none), MissingGerm);
    BoundaryDivisor empty;
    empty.components.push_back({R("1"), {{"p_t", MonomialGerm()}}});
    CHECK_THROWS_AS(lct_ub_at_point(c.point, empty), MissingGerm);
    BoundaryDivisor nonpositive;
    nonpositive.components.push_back({R("0"), {}});
    CHECK_THROWS_AS(lct_ub(nonpositive, {}), BadParameters);
}
