#include "kinstab/lct.hpp"

#include "kinstab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace kinstab {

namespace {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// components with a germ at the point, as (multiplicity, germ)
std::vector<std::pair<Rational, const MonomialGerm*>> restrict_to(const BoundaryDivisor& divisor,
                                                                  const std::string& label) {
    std::vector<std::pair<Rational, const MonomialGerm*>> local;
    for (const auto& comp : divisor.components) {
        auto it = comp.germs.find(label);
        if (it == comp.germs.end()) continue;
        if (it->second.empty())
            throw MissingGerm("empty germ at " + label);
        local.push_back({comp.multiplicity, &it->second});
    }
    return local;
}

// (w1 + w2) / sum mult * ord; nullopt when the order vanishes
std::optional<Rational> objective(const std::vector<std::pair<Rational, const MonomialGerm*>>& local,
                                  std::array<long long, 2> w) {
    Rational denom;
    for (const auto& [mult, germ] : local) denom += mult * Rational(germ->weighted_order(w));
    if (denom.sign() <= 0) return std::nullopt;
    return Rational(w[0] + w[1]) / denom;
}

// scales a positive direction onto the lattice of weight vectors congruent
// to a multiple of (1, q2) mod m
std::optional<std::array<long long, 2>> reduce_to_lattice(std::array<long long, 2> dir,
                                                          long long m, long long q2) {
    if (dir[0] <= 0 || dir[1] <= 0) return std::nullopt;
    long long g = std::gcd(dir[0], dir[1]);
    dir = {dir[0] / g, dir[1] / g};
    if (m == 1) return dir;
    long long defect = mod(dir[1] - dir[0] * q2, m);
    long long s = m / std::gcd(defect, m);
    return std::array<long long, 2>{dir[0] * s, dir[1] * s};
}

struct PointSearch {
    Rational best;
    std::array<long long, 2> witness;
    bool found = false;

    void offer(const std::vector<std::pair<Rational, const MonomialGerm*>>& local,
               std::array<long long, 2> w) {
        auto v = objective(local, w);
        if (!v) return;
        if (!found || *v < best || (*v == best && w < witness)) {
            best = *v;
            witness = w;
            found = true;
        }
    }
};

} // namespace

std::pair<Rational, LctWitness> lct_ub_at_point(const QuotientPoint& point,
                                                const BoundaryDivisor& divisor) {
    auto local = restrict_to(divisor, point.label);
    if (local.empty()) throw MissingGerm("no component has a germ at " + point.label);

    const long long m = point.order;
    const long long q2 = point.local_weights[1];

    std::vector<std::array<long long, 2>> directions;
    directions.push_back({1, q2 == 0 ? 1 : q2}); // type vector
    directions.push_back({1, 1});

    // tie directions between monomial pairs, within and across germs, plus
    // one vertex direction per monomial
    std::vector<std::array<long long, 2>> monomials;
    for (const auto& [mult, germ] : local)
        for (const auto& mo : germ->monomials()) {
            monomials.push_back(mo);
            directions.push_back({std::max(mo[1], 1ll), std::max(mo[0], 1ll)});
        }
    for (size_t i = 0; i < monomials.size(); ++i)
        for (size_t j = i + 1; j < monomials.size(); ++j) {
            long long da = monomials[i][0] - monomials[j][0];
            long long dg = monomials[j][1] - monomials[i][1];
            if (da == 0 || dg == 0) continue;
            if ((da > 0) != (dg > 0)) continue;
            directions.push_back({std::abs(dg), std::abs(da)});
        }

    PointSearch search;
    for (const auto& dir : directions)
        if (auto w = reduce_to_lattice(dir, m, q2)) search.offer(local, *w);
    if (!search.found)
        throw MissingGerm("no candidate weight vector gives a positive order at " + point.label);

    LctWitness witness;
    witness.kind = LctWitness::Kind::PointValuation;
    witness.point = point.label;
    witness.weights = search.witness;
    return {search.best, witness};
}

std::pair<Rational, LctWitness> lct_ub_scan(const QuotientPoint& point,
                                            const BoundaryDivisor& divisor, long long box) {
    auto local = restrict_to(divisor, point.label);
    if (local.empty()) throw MissingGerm("no component has a germ at " + point.label);
    const long long m = point.order;
    const long long q2 = point.local_weights[1];

    PointSearch search;
    for (long long w1 = 1; w1 <= box; ++w1) {
        long long start = m == 1 ? 1 : mod(w1 * q2, m);
        if (start == 0) start = m;
        for (long long w2 = start; w2 <= box; w2 += m) search.offer(local, {w1, w2});
    }
    if (!search.found) throw MissingGerm("scan found no positive order at " + point.label);
    LctWitness witness;
    witness.kind = LctWitness::Kind::PointValuation;
    witness.point = point.label;
    witness.weights = search.witness;
    return {search.best, witness};
}

std::pair<Rational, LctWitness> lct_ub(const BoundaryDivisor& divisor,
                                       const std::vector<QuotientPoint>& points) {
    if (divisor.components.empty()) throw BadParameters("boundary divisor has no components");
    for (const auto& comp : divisor.components)
        if (comp.multiplicity.sign() <= 0)
            throw BadParameters("boundary multiplicities must be positive");

    Rational best;
    LctWitness witness;
    bool found = false;
    // generic-point bound: c * mult <= 1 along each component
    for (int j = 0; j < int(divisor.components.size()); ++j) {
        Rational bound = Rational(1) / divisor.components[j].multiplicity;
        if (!found || bound < best) {
            best = bound;
            witness = LctWitness{LctWitness::Kind::ComponentMultiplicity, "", {1, 1}, j};
            found = true;
        }
    }
    for (const auto& point : points) {
        bool any = false;
        for (const auto& comp : divisor.components)
            if (comp.germs.count(point.label)) any = true;
        if (!any) continue;
        auto [bound, w] = lct_ub_at_point(point, divisor);
        if (bound < best) {
            best = bound;
            witness = w;
        }
    }
    return {best, witness};
}

AlphaReport alpha_verdict(const SurfaceSpec& spec, const BoundaryDivisor& divisor,
                          const std::vector<QuotientPoint>& points) {
    long long index = validate(spec);
    if (spec.weights[0] != 1)
        throw NonUnitFirstWeight("first weight is " + std::to_string(spec.weights[0]) +
                                 "; the tested divisor must lie in |O(1)|");
    auto [bound, witness] = lct_ub(divisor, points);
    AlphaReport report;
    report.lct_bound = bound;
    report.witness = witness;
    report.alpha_bound = bound / Rational(index);
    report.delta_bound = Rational(3) * report.alpha_bound;
    report.verdict =
        report.delta_bound < Rational(1) ? Verdict::NotKSemistable : Verdict::Inconclusive;
    return report;
}

} // namespace kinstab
