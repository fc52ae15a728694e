#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "invoser/errors.hpp"
#include "invoser/rational.hpp"

namespace invoser {

// Power product in the indeterminates X1, X2, ... with integer exponents.
// Canonical form trims trailing zero exponents; only X1 may carry a negative
// exponent, which is what keeps the triangular solves inside the ring.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    // X_{index}, 1-based.
    static Monomial variable(int index, int exponent = 1);

    const std::vector<int>& exponents() const { return exps_; }
    int exponent(int index) const {  // 1-based
        return (index >= 1 && static_cast<std::size_t>(index) <= exps_.size()) ? exps_[index - 1] : 0;
    }
    int num_vars() const { return static_cast<int>(exps_.size()); }
    bool is_unit() const { return exps_.empty(); }
    bool has_negative_exponent() const { return !exps_.empty() && exps_[0] < 0; }

    // Sum of exponents; the grading used by the canonical term order.
    int degree() const;

    Monomial operator*(const Monomial& o) const;
    // Componentwise negation; throws NonInvertibleSubstitution when the result
    // would put a negative exponent on anything but X1.
    Monomial inverse() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    void normalize();
    std::vector<int> exps_;
};

// Graded lexicographic: lower total degree first, then lex on exponent vectors.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Multivariate Laurent polynomial over Rational: X1 invertible, X2, X3, ...
// ordinary. Zero coefficients are never stored, so equality is map equality.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);
    explicit LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}

    static LaurentPoly variable(int index, int exponent = 1) {
        return term(Rational(1), Monomial::variable(index, exponent));
    }
    static LaurentPoly term(const Rational& coef, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    Rational constant_value() const;  // requires is_constant()
    // Largest variable index appearing (0 for constants).
    int max_var_index() const;
    bool mentions_variable(int index) const;
    Rational coefficient(const Monomial& m) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Rational& s) const;
    LaurentPoly operator/(const Rational& s) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    // Nonnegative exponent only; poly^0 == 1.
    LaurentPoly pow(int e) const;

    // Multiplicative inverse, defined for single-term polynomials whose
    // monomial part inverts inside the ring (i.e. X1-powers times a scalar).
    LaurentPoly reciprocal() const;

    // Exact evaluation at X_j = args[j-1].
    Rational eval(std::span<const Rational> args) const;

    // Composition X_j -> images[j-1]. Negative powers of X1 require the image
    // of X1 to be an invertible single-term polynomial.
    LaurentPoly substitute(std::span<const LaurentPoly> images) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Canonical rendering, terms in graded-lex order: "30*X2^3*X1^-6 - ...".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

inline LaurentPoly operator*(const Rational& s, const LaurentPoly& p) { return p * s; }

}  // namespace invoser
