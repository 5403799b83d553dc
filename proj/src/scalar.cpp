#include "magicsq/scalar.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace magicsq {

void Rational::normalize() {
    if (den_ == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
        if (den_ != 1) normalize();
        return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
        if (den_ != 1) normalize();
        return *this;
    }
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    if (den_ != 1) normalize();
    return *this;
}

int Rational::compare(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
        return a.num_ == b.num_ ? 0 : (a.num_ < b.num_ ? -1 : 1);
    }
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

ScalarKind Scalar::kind() const {
    if (!im_.is_zero()) return ScalarKind::GaussianRational;
    if (!re_.is_integer()) return ScalarKind::Rational;
    return ScalarKind::Integer;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    // (a + bi)(c + di) = (ac - bd) + (ad + bc)i; copies keep x *= x sound
    const Rational a = re_, b = im_;
    const Rational c = rhs.re_, d = rhs.im_;
    re_ = a * c - b * d;
    im_ = a * d + b * c;
    return *this;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (!a.im_.is_zero() || !b.im_.is_zero()) {
        throw std::domain_error(
            "ordering is undefined for values with a nonzero imaginary part");
    }
    return Rational::compare(a.re_, b.re_);
}

int Scalar::canonical_compare(const Scalar& a, const Scalar& b) {
    int c = Rational::compare(a.re_, b.re_);
    if (c != 0) return c;
    return Rational::compare(a.im_, b.im_);
}

namespace {

std::string format_rational(const Rational& r) {
    std::string s = r.num().str();
    if (!r.is_integer()) {
        s += '/';
        s += r.den().str();
    }
    return s;
}

// --- literal grammar ---------------------------------------------------
//
//   scalar := part [('+'|'-') part] ;  at most one real and one imaginary
//   part   := [sign] (number ['/' number] ['i'] | 'i')
//
// A parser over self-delimiting tokens; whitespace between tokens is skipped.

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::optional<BigInt> number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return BigInt(std::string(text.substr(start, pos - start)));
    }
    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream oss;
        oss << "malformed scalar literal: " << what;
        if (pos < text.size()) {
            oss << " at \"" << text.substr(pos) << "\"";
        }
        throw std::invalid_argument(oss.str());
    }
};

struct Part {
    Rational value;
    bool imaginary = false;
};

Part parse_part(Lexer& lex) {
    int sgn = 1;
    if (lex.consume('-')) {
        sgn = -1;
    } else {
        lex.consume('+');
    }
    if (lex.consume('i')) {
        return {Rational(sgn), true};
    }
    auto num = lex.number();
    if (!num) lex.fail("expected a number or 'i'");
    BigInt den = 1;
    if (lex.consume('/')) {
        auto d = lex.number();
        if (!d) lex.fail("expected a denominator after '/'");
        if (*d == 0) lex.fail("zero denominator");
        den = *d;
    }
    Part part{Rational(sgn * *num, den), false};
    if (lex.consume('i')) part.imaginary = true;
    return part;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    Lexer lex{text};
    if (lex.done()) lex.fail("empty input");

    Part first = parse_part(lex);
    if (lex.done()) {
        return first.imaginary ? Scalar(Rational(), first.value) : Scalar(first.value);
    }

    char c = lex.peek();
    if (c != '+' && c != '-') lex.fail("stray characters");
    if (first.imaginary) lex.fail("real part must precede the imaginary part");
    Part second = parse_part(lex);
    if (!second.imaginary) lex.fail("second term must be imaginary (missing 'i')");
    if (!lex.done()) lex.fail("stray characters");
    return Scalar(first.value, second.value);
}

std::string format_scalar(const Scalar& x) {
    if (x.is_real()) {
        return format_rational(x.real());
    }
    std::string out;
    const Rational& im = x.imag();
    if (!x.real().is_zero()) {
        out = format_rational(x.real());
        if (im.sign() > 0) out += '+';
    }
    if (im.sign() < 0) out += '-';
    Rational mag = im.sign() < 0 ? -im : im;
    if (!(mag.is_integer() && mag.num() == 1)) {
        out += format_rational(mag);
    }
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    return os << format_scalar(x);
}

}  // namespace magicsq
