#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "invoser/errors.hpp"

namespace invoser {

// Exact arbitrary-precision fraction, the scalar type of the whole library.
// Backed by GMP's mpq; always kept canonical (reduced, denominator > 0).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: implicit on purpose, scalars mix freely
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(int num, int den) : Rational(Rational(num) / Rational(den)) {}
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p", "-p" or "p/q" with decimal integers.
    static Rational from_string(const std::string& text);

    static Rational factorial(unsigned n);
    static Rational binomial(unsigned n, unsigned k);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Integer power; negative exponents invert (zero base -> DivisionByZero).
    Rational pow(long e) const;

    std::string str() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    mpq_class v_;
};

}  // namespace invoser
