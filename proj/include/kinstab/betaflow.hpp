#pragma once

#include "kinstab/geometry.hpp"
#include "kinstab/rational.hpp"
#include "kinstab/zariski.hpp"

#include <array>
#include <string>
#include <vector>

namespace kinstab {

enum class Verdict { NotKSemistable, Inconclusive };

std::string to_string(Verdict v);

struct QuadSegment {
    Rational lo, hi;
    std::array<Rational, 3> coeffs; // c0 + c1 x + c2 x^2
    std::vector<int> support;       // Zariski support on the open segment

    Rational value(const Rational& x) const;
    Rational derivative(const Rational& x) const;
};

/// The volume function x -> vol(pi*(-K) - x E) as exact rational
/// breakpoints 0 = b_0 < ... < b_r = tau and one quadratic per interval.
/// Construction verifies continuity, nonnegativity, monotone decrease and
/// vol(tau) = 0.
class PiecewiseQuadratic {
public:
    PiecewiseQuadratic(std::vector<Rational> breakpoints, std::vector<QuadSegment> segments);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<QuadSegment>& segments() const { return segments_; }
    Rational tau() const { return breakpoints_.back(); }

    /// Value at x in [0, tau]; 0 past tau.
    Rational value_at(const Rational& x) const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<QuadSegment> segments_;
};

/// Walks x upward from 0. On each segment the Zariski support is constant
/// and the volume is the quadratic P(x)^2; breakpoints are the exact roots
/// of the affine products P(x) . C, and tau is the first root of the
/// segment quadratic. Throws DegenerateConfig if vol(0) <= 0 or the walk
/// leaves the structure the segment model assumes.
PiecewiseQuadratic volume_curve(const BlowupResult& br);

/// Exact closed-form antiderivative summed over segments.
Rational integrate(const PiecewiseQuadratic& pq);

struct BetaReport {
    Rational log_discrepancy;
    Rational antican_sq;
    Rational tau;
    PiecewiseQuadratic curve;
    Rational integral;
    Rational beta;
    Verdict verdict;
};

/// beta(E) = A(E) (-K)^2 - integral of the volume curve. A single negative
/// value certifies that the surface is not K-semistable; a nonnegative one
/// proves nothing by itself.
BetaReport beta(const SurfaceSpec& spec, const BlowupResult& br);

} // namespace kinstab
