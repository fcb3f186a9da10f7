#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace vblocks {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number.  Always stored in lowest terms with a positive
/// denominator; all arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT
    Rational(BigInt num, BigInt den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a", "-a/b" or "a/b" with arbitrary-precision parts.
    static Rational parse(const std::string& text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    /// Truncates toward zero; only valid when the value is an integer that
    /// fits in long (used for small combinatorial indices).
    long to_long() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// a/b rendered as "a" when b == 1, else "a/b".
    std::string str() const;

    std::size_t hash() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_; // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact rational (convenience for 1/i! coefficients).
Rational factorial(long n);

/// Generalized binomial coefficient binom(a, b) for integer a (possibly
/// negative) and b >= 0; zero for b < 0.
Rational binomial(long a, long b);

} // namespace vblocks

template <> struct std::hash<vblocks::Rational> {
    std::size_t operator()(const vblocks::Rational& r) const { return r.hash(); }
};
