#pragma once

#include "kinstab/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace kinstab {

/// A hypersurface of degree d in weighted projective 3-space with weights
/// a0 <= a1 <= a2 <= a3. Structural data only; defining polynomials are
/// carried by scenarios as documentation, never parsed.
struct SurfaceSpec {
    std::array<long long, 4> weights;
    long long degree;

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// Checks the spec invariants and returns the index
/// I = a0 + a1 + a2 + a3 - d.
/// Throws UnsortedWeights, NonPositiveIndex or NotWellFormed.
long long validate(const SurfaceSpec& spec);

/// O(1)^2 = d / (a0 a1 a2 a3).
Rational hyperplane_square(const SurfaceSpec& spec);

/// (-K)^2 = I^2 d / (a0 a1 a2 a3).
Rational antican_square(const SurfaceSpec& spec);

/// Cyclic quotient singularity 1/m(q1, q2) in canonical form: q1 = 1
/// (reached by multiplying the generator by q1^{-1} mod m). Smooth points
/// use m = 1 with weights (1, 1).
struct QuotientPoint {
    std::string label;
    long long order = 1;
    std::array<long long, 2> local_weights{1, 1};
    std::array<std::string, 2> coordinate_names{"u", "v"};

    friend bool operator==(const QuotientPoint&, const QuotientPoint&) = default;
};

/// Normalizes raw local weights (from the ambient group action) to the
/// canonical 1/m(1, q) form. Throws NotCoprime when gcd(r_i, m) != 1.
QuotientPoint normalize_quotient(long long m, std::array<long long, 2> raw,
                                 std::string label = "p",
                                 std::array<std::string, 2> coordinate_names = {"u", "v"});

/// Section count of O(k): monomials of weighted degree k in four variables
/// minus those of degree k - d. Pure lattice-point counting, independent of
/// the intersection-theoretic volume path.
std::int64_t h0_count(const SurfaceSpec& spec, long long k);

} // namespace kinstab
