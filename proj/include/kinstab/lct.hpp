#pragma once

#include "kinstab/betaflow.hpp"
#include "kinstab/geometry.hpp"
#include "kinstab/rational.hpp"
#include "kinstab/surface.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kinstab {

/// One component of an effective boundary divisor: its multiplicity and its
/// monomial germs at whichever marked points it passes through (keyed by
/// point label).
struct BoundaryComponent {
    Rational multiplicity;
    std::map<std::string, MonomialGerm> germs;
};

struct BoundaryDivisor {
    std::vector<BoundaryComponent> components;
};

struct LctWitness {
    enum class Kind { PointValuation, ComponentMultiplicity };
    Kind kind = Kind::ComponentMultiplicity;
    std::string point;
    std::array<long long, 2> weights{1, 1};
    int component = -1;
};

/// Certified upper bound for the log canonical threshold at one quotient
/// point: minimizes (w1 + w2) / sum_j mult_j * ord_j(w) over weight vectors
/// in the admissible lattice. Candidates are the tie directions between
/// germ monomials, the type vector, and per-monomial vertex directions;
/// the objective is a ratio of affine functions between ties, so interior
/// minima happen at ties. Any candidate already yields a valid bound.
std::pair<Rational, LctWitness> lct_ub_at_point(const QuotientPoint& point,
                                                const BoundaryDivisor& divisor);

/// Exhaustive reference search over all admissible weight vectors with
/// entries up to `box`; used to backstop the candidate search.
std::pair<Rational, LctWitness> lct_ub_scan(const QuotientPoint& point,
                                            const BoundaryDivisor& divisor, long long box);

/// Overall bound: min of the generic-point bounds 1/mult_j and the
/// per-point valuation bounds over the supplied candidate points.
std::pair<Rational, LctWitness> lct_ub(const BoundaryDivisor& divisor,
                                       const std::vector<QuotientPoint>& points);

struct AlphaReport {
    Rational lct_bound;
    LctWitness witness;
    Rational alpha_bound; // lct_bound / I, valid since the divisor is H with I H = -K
    Rational delta_bound; // 3 * alpha_bound on a surface
    Verdict verdict;      // NotKSemistable iff delta_bound < 1
};

/// Requires a0 = 1 so that the tested divisor lies in |O(1)| and I times it
/// is anticanonical; throws NonUnitFirstWeight otherwise.
AlphaReport alpha_verdict(const SurfaceSpec& spec, const BoundaryDivisor& divisor,
                          const std::vector<QuotientPoint>& points);

} // namespace kinstab
