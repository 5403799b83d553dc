#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace magicsq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction. Always stored reduced with a positive denominator;
/// zero is 0/1. Construction with a zero denominator throws.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// Three-way numeric comparison (total order).
    static int compare(const Rational& a, const Rational& b);

    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

private:
    BigInt num_{0};
    BigInt den_{1};

    void normalize();
};

enum class ScalarKind { Integer, Rational, GaussianRational };

/// Exact number: arbitrary-precision integer, rational, or Gaussian rational
/// a + b*i with rational components. Values are kept canonical, so a Gaussian
/// with zero imaginary part compares equal to the plain rational, and a
/// rational with denominator 1 compares equal to the integer. Immutable in
/// spirit: all operations return new values.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) : re_(n) {}
    Scalar(BigInt n) : re_(std::move(n)) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(BigInt num, BigInt den) {
        return Scalar(Rational(std::move(num), std::move(den)));
    }
    static Scalar gaussian(Rational re, Rational im) {
        return Scalar(std::move(re), std::move(im));
    }

    ScalarKind kind() const;
    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_integer() const { return im_.is_zero() && re_.is_integer(); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Numeric three-way comparison. Defined for real values only; throws
    /// std::domain_error when either side has a nonzero imaginary part.
    static int compare(const Scalar& a, const Scalar& b);

    /// Deterministic total order over all scalars, lexicographic on
    /// (real, imaginary). Used for canonical sorting, not numeric meaning.
    static int canonical_compare(const Scalar& a, const Scalar& b);

    friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

private:
    Rational re_;
    Rational im_;
};

/// Parses a scalar literal: optional sign, integer or "p/q", optionally a
/// "± (integer|p/q) i" imaginary part ("i" alone stands for 1i). Whitespace
/// around tokens is ignored. Throws std::invalid_argument naming the
/// offending token on malformed input.
Scalar parse_scalar(std::string_view text);

/// Canonical text: integers bare, rationals "p/q" reduced, Gaussians
/// "a+bi"/"a-bi" with zero parts elided and unit coefficients written "i".
/// parse_scalar(format_scalar(x)) == x for every scalar.
std::string format_scalar(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace magicsq
