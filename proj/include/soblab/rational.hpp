#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace soblab {

/// Exact rational number with 64-bit numerator/denominator.
///
/// All index arithmetic in the classifier runs on this type: embedding
/// verdicts flip across measure-zero curves, so boundary membership must
/// never depend on float rounding. Intermediate products are taken in
/// 128-bit arithmetic and reduced; if a reduced value still does not fit
/// in 64 bits, operations throw std::overflow_error instead of silently
/// wrapping.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact conversion of a finite double (doubles are binary rationals).
    /// Throws std::overflow_error if the value needs more than 64 bits.
    static Rational from_double(double x);

    /// Parses "3", "-1/2", "0.25", "2.5e-1". Exact: decimal strings become
    /// the rational they denote, not the nearest double.
    static Rational parse(std::string_view text);

    /// "n/d", or just "n" when the denominator is 1.
    std::string str() const;

  private:
    std::int64_t num_;
    std::int64_t den_;
};

inline Rational operator+(std::int64_t a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(std::int64_t a, const Rational& b) { return Rational(a) / b; }

/// Extended real: a rational or +infinity. Used for integrability
/// exponents, where p = +infinity is a distinct representable value,
/// never a large float.
class ExtReal {
  public:
    ExtReal() : inf_(false), fin_() {}
    ExtReal(Rational r) : inf_(false), fin_(r) {}
    ExtReal(std::int64_t n) : inf_(false), fin_(n) {}
    static ExtReal infinity() { ExtReal e; e.inf_ = true; return e; }

    bool is_infinite() const { return inf_; }
    bool is_finite() const { return !inf_; }

    /// Finite value; throws std::domain_error on +infinity.
    const Rational& finite() const;

    /// 1/x with the convention 1/inf = 0. Throws on x = 0.
    Rational reciprocal() const;

    bool operator==(const ExtReal& o) const;
    std::strong_ordering operator<=>(const ExtReal& o) const;
    bool operator==(const Rational& o) const { return !inf_ && fin_ == o; }

    /// Finite * finite; inf * positive = inf. Throws on inf * 0 and inf * negative.
    ExtReal operator*(const Rational& o) const;

    double to_double() const;

    /// Parses "inf"/"+inf"/"infinity" or anything Rational::parse accepts.
    static ExtReal parse(std::string_view text);

    std::string str() const { return inf_ ? "inf" : fin_.str(); }

  private:
    bool inf_;
    Rational fin_;
};

} // namespace soblab
