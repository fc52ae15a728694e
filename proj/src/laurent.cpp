#include "invoser/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace invoser {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) { normalize(); }

void Monomial::normalize() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
    for (std::size_t i = 1; i < exps_.size(); ++i) {
        if (exps_[i] < 0)
            throw RangeError("negative exponent on X" + std::to_string(i + 1) +
                             " (only X1 may be inverted)");
    }
}

Monomial Monomial::variable(int index, int exponent) {
    if (index < 1) throw RangeError("variable index must be >= 1");
    std::vector<int> e(static_cast<std::size_t>(index), 0);
    e[static_cast<std::size_t>(index) - 1] = exponent;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (std::size_t i = 0; i < o.exps_.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::inverse() const {
    for (std::size_t i = 1; i < exps_.size(); ++i) {
        if (exps_[i] != 0)
            throw NonInvertibleSubstitution("monomial with X" + std::to_string(i + 1) +
                                            " has no inverse in the ring");
    }
    std::vector<int> e = exps_;
    for (int& x : e) x = -x;
    return Monomial(std::move(e));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::size_t n = std::max(ea.size(), eb.size());
    for (std::size_t i = 0; i < n; ++i) {
        int xa = i < ea.size() ? ea[i] : 0;
        int xb = i < eb.size() ? eb[i] : 0;
        if (xa != xb) return xa < xb;
    }
    return false;
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

LaurentPoly LaurentPoly::term(const Rational& coef, const Monomial& m) {
    LaurentPoly p;
    if (!coef.is_zero()) p.terms_.emplace(m, coef);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw RangeError("constant_value() on a non-constant polynomial");
    return terms_.begin()->second;
}

int LaurentPoly::max_var_index() const {
    int m = 0;
    for (const auto& [mono, _] : terms_) m = std::max(m, mono.num_vars());
    return m;
}

bool LaurentPoly::mentions_variable(int index) const {
    for (const auto& [mono, _] : terms_)
        if (mono.exponent(index) != 0) return true;
    return false;
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return LaurentPoly();
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

LaurentPoly LaurentPoly::operator/(const Rational& s) const { return *this * s.reciprocal(); }

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw RangeError("LaurentPoly::pow expects a nonnegative exponent");
    LaurentPoly r(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
    if (terms_.empty()) throw NonInvertibleSubstitution("zero polynomial has no reciprocal");
    if (terms_.size() != 1)
        throw NonInvertibleSubstitution("only single-term polynomials are invertible");
    const auto& [m, c] = *terms_.begin();
    return term(c.reciprocal(), m.inverse());
}

Rational LaurentPoly::eval(std::span<const Rational> args) const {
    int needed = max_var_index();
    if (static_cast<int>(args.size()) < needed)
        throw ArityError("evaluation needs " + std::to_string(needed) + " arguments, got " +
                         std::to_string(args.size()));
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(1) < 0 && args[0].is_zero())
            throw ZeroAtPole("argument for X1 is zero but X1 appears inverted");
        Rational t = c;
        const auto& e = m.exponents();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] != 0) t *= args[j].pow(e[j]);
        }
        total += t;
    }
    return total;
}

LaurentPoly LaurentPoly::substitute(std::span<const LaurentPoly> images) const {
    int needed = max_var_index();
    if (static_cast<int>(images.size()) < needed)
        throw ArityError("substitution needs " + std::to_string(needed) + " images, got " +
                         std::to_string(images.size()));
    LaurentPoly total;
    for (const auto& [m, c] : terms_) {
        LaurentPoly t(c);
        const auto& e = m.exponents();
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (e[j] > 0) {
                t = t * images[j].pow(e[j]);
            } else {
                // Only X1 can get here; its image must invert term-wise.
                t = t * images[j].reciprocal().pow(-e[j]);
            }
        }
        total += t;
    }
    return total;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        const auto& e = m.exponents();
        bool wrote_factor = false;
        if (!a.is_one() || m.is_unit()) {
            os << a.str();
            wrote_factor = true;
        }
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (wrote_factor) os << "*";
            os << "X" << (j + 1);
            if (e[j] != 1) os << "^" << e[j];
            wrote_factor = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace invoser
