#include "kinstab/betaflow.hpp"

#include "kinstab/errors.hpp"

#include <algorithm>
#include <optional>

namespace kinstab {

std::string to_string(Verdict v) {
    return v == Verdict::NotKSemistable ? "NotKSemistable" : "Inconclusive";
}

Rational QuadSegment::value(const Rational& x) const {
    return coeffs[0] + coeffs[1] * x + coeffs[2] * x * x;
}

Rational QuadSegment::derivative(const Rational& x) const {
    return coeffs[1] + Rational(2) * coeffs[2] * x;
}

PiecewiseQuadratic::PiecewiseQuadratic(std::vector<Rational> breakpoints,
                                       std::vector<QuadSegment> segments)
    : breakpoints_(std::move(breakpoints)), segments_(std::move(segments)) {
    if (breakpoints_.size() != segments_.size() + 1 || segments_.empty())
        throw DegenerateConfig("malformed piecewise quadratic");
    if (!breakpoints_.front().is_zero()) throw DegenerateConfig("curve must start at 0");
    for (size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw DegenerateConfig("breakpoints must increase strictly");
    for (size_t i = 0; i < segments_.size(); ++i) {
        const QuadSegment& s = segments_[i];
        if (s.lo != breakpoints_[i] || s.hi != breakpoints_[i + 1])
            throw DegenerateConfig("segment bounds disagree with breakpoints");
        // affine derivative: nonpositive at both ends means nonincreasing throughout
        if (s.derivative(s.lo).sign() > 0 || s.derivative(s.hi).sign() > 0)
            throw DegenerateConfig("volume curve is not nonincreasing");
        if (s.value(s.lo).sign() < 0 || s.value(s.hi).sign() < 0)
            throw DegenerateConfig("volume curve takes a negative value");
        if (i + 1 < segments_.size() && s.value(s.hi) != segments_[i + 1].value(s.hi))
            throw DegenerateConfig("volume curve is discontinuous at " + s.hi.str());
    }
    if (!segments_.back().value(segments_.back().hi).is_zero())
        throw DegenerateConfig("volume curve does not vanish at tau");
}

Rational PiecewiseQuadratic::value_at(const Rational& x) const {
    if (x.sign() < 0) throw BadParameters("volume curve evaluated at negative x");
    if (x >= tau()) return Rational(0);
    size_t i = 0;
    while (i + 1 < segments_.size() && x >= breakpoints_[i + 1]) ++i;
    return segments_[i].value(x);
}

namespace {

// exact square root of a nonnegative rational, if it is one
std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    Int sn = boost::multiprecision::sqrt(x.num());
    Int sd = boost::multiprecision::sqrt(x.den());
    if (sn * sn != x.num() || sd * sd != x.den()) return std::nullopt;
    return Rational(sn, sd);
}

// Smallest root of q = c0 + c1 x + c2 x^2 in (lo, hi], given q(lo) > 0;
// hi absent means +inf. A root inside the interval must be rational (the
// walk promises exact breakpoints), so an irrational one raises.
std::optional<Rational> first_root_after(const std::array<Rational, 3>& c, const Rational& lo,
                                         const std::optional<Rational>& hi) {
    auto eval = [&](const Rational& x) { return c[0] + c[1] * x + c[2] * x * x; };
    if (c[2].is_zero()) {
        if (c[1].is_zero()) return std::nullopt;
        Rational r = -c[0] / c[1];
        if (r > lo && (!hi || r <= *hi)) return r;
        return std::nullopt;
    }
    Rational disc = c[1] * c[1] - Rational(4) * c[0] * c[2];
    if (disc.sign() < 0) return std::nullopt;
    if (auto s = exact_sqrt(disc)) {
        Rational r1 = (-c[1] - *s) / (Rational(2) * c[2]);
        Rational r2 = (-c[1] + *s) / (Rational(2) * c[2]);
        if (r2 < r1) std::swap(r1, r2);
        for (const Rational& r : {r1, r2})
            if (r > lo && (!hi || r <= *hi)) return r;
        return std::nullopt;
    }
    // irrational roots: decide whether one lies in the interval
    bool inside = false;
    if (hi && eval(*hi).sign() < 0) {
        inside = true;
    } else if (c[2].sign() > 0) {
        // convex with disc > 0: dips below zero around the vertex
        Rational vertex = -c[1] / (Rational(2) * c[2]);
        inside = vertex > lo && (!hi || vertex < *hi);
    } else if (!hi) {
        inside = true; // concave and unbounded: eventually negative
    }
    if (inside)
        throw DegenerateConfig("volume threshold is not rational (discriminant " + disc.str() +
                               ")");
    return std::nullopt;
}

struct AffineDivisor {
    RDivisor c0, c1; // coefficients c0 + x c1
};

} // namespace

PiecewiseQuadratic volume_curve(const BlowupResult& br) {
    const CurveSystem& cs = br.curves;
    const int n = cs.size();
    const int e = br.e_index();

    AffineDivisor d;
    d.c0 = pullback_anticanonical(br);
    d.c1.assign(n, Rational(0));
    d.c1[e] = Rational(-1);

    std::vector<char> in_support(n, 0);
    std::vector<int> support;
    Rational cur; // segment start

    std::vector<Rational> breakpoints{Rational(0)};
    std::vector<QuadSegment> segments;

    for (int guard = 0; guard <= n + 1; ++guard) {
        // resolve the support valid just after `cur`, then cut the segment
        AffineDivisor p;
        std::vector<Rational> a0, a1;
        for (;;) {
            if (!support.empty()) {
                SymMatrix sub = cs.gram.principal_submatrix(support);
                std::vector<Rational> r0(support.size()), r1(support.size());
                for (size_t j = 0; j < support.size(); ++j) {
                    Rational s0, s1;
                    for (int i = 0; i < n; ++i) {
                        if (!d.c0[i].is_zero()) s0 += d.c0[i] * cs.gram(i, support[j]);
                        if (!d.c1[i].is_zero()) s1 += d.c1[i] * cs.gram(i, support[j]);
                    }
                    r0[j] = s0;
                    r1[j] = s1;
                }
                try {
                    a0 = solve(sub, r0);
                    a1 = solve(sub, r1);
                } catch (const SingularMatrix&) {
                    throw DegenerateConfig("singular support form inside the volume walk");
                }
                if (!is_negative_definite(sub))
                    throw DegenerateConfig("support form lost negative definiteness before tau");
            }
            p = d;
            for (size_t j = 0; j < support.size(); ++j) {
                p.c0[support[j]] -= a0[j];
                p.c1[support[j]] -= a1[j];
            }
            // grow the support: any curve whose product is negative just
            // after `cur` (negative value, or zero value with negative slope)
            bool grew = false;
            for (int j = 0; j < n; ++j) {
                if (in_support[j]) continue;
                Rational alpha, beta_slope;
                for (int i = 0; i < n; ++i) {
                    if (!p.c0[i].is_zero()) alpha += p.c0[i] * cs.gram(i, j);
                    if (!p.c1[i].is_zero()) beta_slope += p.c1[i] * cs.gram(i, j);
                }
                Rational at_cur = alpha + beta_slope * cur;
                if (at_cur.sign() < 0 || (at_cur.is_zero() && beta_slope.sign() < 0)) {
                    in_support[j] = 1;
                    grew = true;
                }
            }
            if (!grew) break;
            support.clear();
            for (int j = 0; j < n; ++j)
                if (in_support[j]) support.push_back(j);
        }

        // negative-part coefficients stay nonnegative and nondecreasing
        for (size_t j = 0; j < support.size(); ++j) {
            if ((a0[j] + a1[j] * cur).sign() < 0)
                throw DegenerateConfig("negative support coefficient at " + cur.str());
            if (a1[j].sign() < 0)
                throw DegenerateConfig("support coefficient decreasing in x; removal not modeled");
        }

        // segment quadratic q(x) = P(x).P(x)
        std::array<Rational, 3> q{};
        {
            Rational q00 = intersect(cs.gram, p.c0, p.c0);
            Rational q01 = intersect(cs.gram, p.c0, p.c1);
            Rational q11 = intersect(cs.gram, p.c1, p.c1);
            q = {q00, Rational(2) * q01, q11};
        }
        if (cur.is_zero()) {
            Rational v0 = q[0];
            if (v0.sign() <= 0) throw DegenerateConfig("vol(0) = " + v0.str() + " is not positive");
        }

        // next support change: first down-crossing of an off-support product
        std::optional<Rational> next_change;
        for (int j = 0; j < n; ++j) {
            if (in_support[j]) continue;
            Rational alpha, beta_slope;
            for (int i = 0; i < n; ++i) {
                if (!p.c0[i].is_zero()) alpha += p.c0[i] * cs.gram(i, j);
                if (!p.c1[i].is_zero()) beta_slope += p.c1[i] * cs.gram(i, j);
            }
            if (beta_slope.sign() >= 0) continue;
            Rational root = -alpha / beta_slope;
            if (root > cur && (!next_change || root < *next_change)) next_change = root;
        }

        // tau candidate: first vanishing of the segment quadratic
        std::optional<Rational> tau = first_root_after(q, cur, next_change);
        if (tau) {
            segments.push_back({cur, *tau, q, support});
            breakpoints.push_back(*tau);
            return PiecewiseQuadratic(std::move(breakpoints), std::move(segments));
        }
        if (!next_change)
            throw DegenerateConfig("volume never reaches zero; divisor class is unbounded");
        segments.push_back({cur, *next_change, q, support});
        breakpoints.push_back(*next_change);
        cur = *next_change;
    }
    throw DegenerateConfig("support changes exceeded the basis size");
}

Rational integrate(const PiecewiseQuadratic& pq) {
    Rational total;
    for (const auto& s : pq.segments()) {
        Rational lo = s.lo, hi = s.hi;
        Rational lo2 = lo * lo, hi2 = hi * hi;
        total += s.coeffs[0] * (hi - lo);
        total += s.coeffs[1] * (hi2 - lo2) / Rational(2);
        total += s.coeffs[2] * (hi2 * hi - lo2 * lo) / Rational(3);
    }
    return total;
}

BetaReport beta(const SurfaceSpec& spec, const BlowupResult& br) {
    PiecewiseQuadratic curve = volume_curve(br);
    Rational a = br.log_discrepancy;
    Rational k2 = antican_square(spec);
    Rational integral = integrate(curve);
    Rational value = a * k2 - integral;
    Verdict verdict = value.sign() < 0 ? Verdict::NotKSemistable : Verdict::Inconclusive;
    return BetaReport{a, k2, curve.tau(), std::move(curve), integral, value, verdict};
}

} // namespace kinstab
