#pragma once

#include "kinstab/geometry.hpp"
#include "kinstab/rational.hpp"

#include <vector>

namespace kinstab {

/// An R-divisor on the span of a curve basis, as its coefficient vector.
using RDivisor = std::vector<Rational>;

Rational intersect(const SymMatrix& gram, const RDivisor& a, const RDivisor& b);

/// D . C_i >= 0 for every basis curve.
bool nef_check(const CurveSystem& cs, const RDivisor& d);

/// Zariski decomposition D = P + sum a_i C_i: P orthogonal to the support,
/// nonnegative on the basis, support form negative definite, a_i > 0
/// (curves with coefficient zero are left out of the support).
struct Decomposition {
    RDivisor positive;
    std::vector<int> support;      // ascending basis indices
    std::vector<Rational> coeffs;  // aligned with support

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Grows the support iteratively: every curve meeting the candidate positive
/// part negatively joins, the orthogonality system is re-solved, and the
/// loop repeats until nef. Throws NotPseudoeffective when the support form
/// turns singular or indefinite, or a coefficient comes out negative.
Decomposition decompose(const CurveSystem& cs, const RDivisor& d);

/// Independent oracle: tries every curve subset with negative definite form
/// and keeps the one giving nonnegative coefficients and a nef orthogonal
/// part. Basis size is capped at 16.
Decomposition decompose_bruteforce(const CurveSystem& cs, const RDivisor& d);

/// P^2 of the decomposition, or 0 when D is not pseudoeffective.
Rational volume(const CurveSystem& cs, const RDivisor& d);

} // namespace kinstab
