#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kinstab {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always normalized: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Every quantity in the engine is one
/// of these; there is no floating-point fallback anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int n, Int d);
    Rational(long long n, long long d) : Rational(Int(n), Int(d)) {}

    /// Accepts "p", "-p", "p/q" with q > 0.
    static Rational parse(std::string_view text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws Error on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or just "p" for integers.
    std::string str() const;

private:
    void normalize();
    Int num_, den_;
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace kinstab
