#include "soblab/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace soblab {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(checked_narrow(n), checked_narrow(d));
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_;
    i128 rhs = i128(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp); // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 mantissa bits
    std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    while (m != 0 && (m & 1) == 0) {
        m >>= 1;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 62) throw std::overflow_error("from_double: exponent too large");
        return make_reduced(i128(m) << exp, 1);
    }
    if (-exp > 62) throw std::overflow_error("from_double: exponent too small");
    return make_reduced(m, i128(1) << (-exp));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::size_t pos1 = 0, pos2 = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &pos1);
        std::int64_t d = std::stoll(s.substr(slash + 1), &pos2);
        if (pos1 != slash || pos2 != s.size() - slash - 1)
            throw std::invalid_argument("malformed rational literal: " + s);
        return Rational(n, d);
    }

    // Decimal form, possibly with exponent: sign, digits, '.', digits, e±k.
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    i128 mantissa = 0;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed rational literal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            if (mantissa > (i128(1) << 100)) throw std::overflow_error("rational literal too long: " + s);
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    int exp10 = 0;
    if (i < s.size()) { // exponent part
        std::size_t pos = 0;
        exp10 = std::stoi(s.substr(i + 1), &pos);
        if (pos != s.size() - i - 1) throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + s);

    int net = exp10 - frac_digits;
    i128 n = neg ? -mantissa : mantissa;
    i128 d = 1;
    for (; net > 0; --net) n *= 10;
    for (; net < 0; ++net) d *= 10;
    return make_reduced(n, d);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

const Rational& ExtReal::finite() const {
    if (inf_) throw std::domain_error("finite() on +infinity");
    return fin_;
}

Rational ExtReal::reciprocal() const {
    if (inf_) return Rational(0);
    return Rational(1) / fin_;
}

bool ExtReal::operator==(const ExtReal& o) const {
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return fin_ == o.fin_;
}

std::strong_ordering ExtReal::operator<=>(const ExtReal& o) const {
    if (inf_ && o.inf_) return std::strong_ordering::equal;
    if (inf_) return std::strong_ordering::greater;
    if (o.inf_) return std::strong_ordering::less;
    return fin_ <=> o.fin_;
}

ExtReal ExtReal::operator*(const Rational& o) const {
    if (inf_) {
        if (!o.is_positive()) throw std::domain_error("inf * non-positive is undefined");
        return infinity();
    }
    return ExtReal(fin_ * o);
}

double ExtReal::to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : fin_.to_double();
}

ExtReal ExtReal::parse(std::string_view text) {
    if (text == "inf" || text == "+inf" || text == "infinity" || text == "Inf")
        return infinity();
    return ExtReal(Rational::parse(text));
}

} // namespace soblab
