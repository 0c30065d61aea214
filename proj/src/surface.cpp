#include "kinstab/surface.hpp"

#include "kinstab/errors.hpp"

#include <numeric>
#include <sstream>

namespace kinstab {

namespace {

long long gcd3(long long a, long long b, long long c) {
    return std::gcd(std::gcd(a, b), c);
}

// smallest nonnegative representative of a mod m
long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// inverse of a mod m; caller guarantees gcd(a, m) = 1
long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod(t, m);
}

} // namespace

long long validate(const SurfaceSpec& spec) {
    const auto& a = spec.weights;
    for (int i = 0; i < 4; ++i)
        if (a[i] <= 0) throw NotWellFormed("weights must be positive");
    if (spec.degree <= 0) throw NotWellFormed("degree must be positive");
    if (!(a[0] <= a[1] && a[1] <= a[2] && a[2] <= a[3]))
        throw UnsortedWeights("weights must be sorted ascending");

    long long index = a[0] + a[1] + a[2] + a[3] - spec.degree;
    if (index <= 0) throw NonPositiveIndex("index " + std::to_string(index) + " is not positive");

    // well-formedness: every weight triple is coprime, and every weight pair
    // has gcd dividing the degree
    for (int i = 0; i < 4; ++i) {
        long long g = gcd3(a[(i + 1) % 4], a[(i + 2) % 4], a[(i + 3) % 4]);
        if (g != 1)
            throw NotWellFormed("weight triple omitting a" + std::to_string(i) +
                                " has gcd " + std::to_string(g));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long long g = std::gcd(a[i], a[j]);
            if (spec.degree % g != 0)
                throw NotWellFormed("gcd(a" + std::to_string(i) + ", a" + std::to_string(j) +
                                    ") = " + std::to_string(g) + " does not divide the degree");
        }
    return index;
}

Rational hyperplane_square(const SurfaceSpec& spec) {
    const auto& a = spec.weights;
    return Rational(Int(spec.degree), Int(a[0]) * a[1] * a[2] * a[3]);
}

Rational antican_square(const SurfaceSpec& spec) {
    long long index = validate(spec);
    return Rational(Int(index) * index) * hyperplane_square(spec);
}

QuotientPoint normalize_quotient(long long m, std::array<long long, 2> raw,
                                 std::string label,
                                 std::array<std::string, 2> coordinate_names) {
    if (m <= 0) throw BadParameters("quotient order must be positive");
    QuotientPoint p;
    p.label = std::move(label);
    p.order = m;
    p.coordinate_names = coordinate_names;
    if (m == 1) {
        p.local_weights = {1, 1};
        return p;
    }
    long long r1 = mod(raw[0], m), r2 = mod(raw[1], m);
    if (std::gcd(r1, m) != 1 || std::gcd(r2, m) != 1) {
        std::ostringstream msg;
        msg << "local weights (" << raw[0] << ", " << raw[1] << ") are not coprime to " << m;
        throw NotCoprime(msg.str());
    }
    long long inv = mod_inverse(r1, m);
    p.local_weights = {1, mod(r2 * inv, m)};
    return p;
}

std::int64_t h0_count(const SurfaceSpec& spec, long long k) {
    if (k < 0) throw BadParameters("h0_count needs k >= 0");
    const auto& a = spec.weights;

    // number of (e1, e0) >= 0 with e1*a1 + e0*a0 = r
    auto pairs = [&](long long r, long long a1, long long a0) -> std::int64_t {
        if (r < 0) return 0;
        long long g = std::gcd(a1, a0);
        if (r % g != 0) return 0;
        long long m = a0 / g;
        long long hi = r / a1;
        if (m == 1) return hi + 1;
        // smallest e1 >= 0 with e1*a1 = r (mod a0); further solutions step by m
        long long e1 = mod((r / g) % m * mod_inverse((a1 / g) % m, m), m);
        if (e1 > hi) return 0;
        return (hi - e1) / m + 1;
    };

    auto count = [&](long long deg) -> std::int64_t {
        if (deg < 0) return 0;
        std::int64_t total = 0;
        for (long long e3 = 0; e3 * a[3] <= deg; ++e3)
            for (long long e2 = 0; e3 * a[3] + e2 * a[2] <= deg; ++e2)
                total += pairs(deg - e3 * a[3] - e2 * a[2], a[1], a[0]);
        return total;
    };

    return count(k) - count(k - spec.degree);
}

} // namespace kinstab
