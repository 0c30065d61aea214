#include "kinstab/rational.hpp"

#include "kinstab/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>

namespace kinstab {

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw Error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw ParseError("not a rational: \"" + std::string(text) + "\""); };
    if (text.empty()) bad();
    size_t slash = text.find('/');
    auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
        if (s.empty()) bad();
        bool negative = false;
        size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) bad();
        for (size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') bad();
        Int value(std::string(s.substr(i)));
        return negative ? Int(-value) : value;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    Int n = parse_int(text.substr(0, slash), true);
    Int d = parse_int(text.substr(slash + 1), false);
    if (d == 0) bad();
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // denominators are positive, so cross-multiplication preserves order
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

} // namespace kinstab
