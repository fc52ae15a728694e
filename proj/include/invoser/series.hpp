#pragma once

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "invoser/bell.hpp"
#include "invoser/errors.hpp"
#include "invoser/laurent.hpp"
#include "invoser/rational.hpp"

namespace invoser {

// Truncated formal power series in the exponential (Taylor) convention:
// coeff(n) stores f_n = D^n(f)(0), i.e. f = sum f_n x^n / n!. The coefficient
// ring R is Rational or LaurentPoly; values are immutable once built.
template <class R>
class SeriesT {
public:
    explicit SeriesT(int order) : c_(check_order(order) + 1, R(0)) {}
    SeriesT(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != check_order(order) + 1)
            throw OrderMismatch("coefficient count does not match order");
    }

    static SeriesT zero(int order) { return SeriesT(order); }
    static SeriesT constant(int order, R value) {
        SeriesT s(order);
        s.c_[0] = std::move(value);
        return s;
    }
    static SeriesT identity(int order) {
        if (order < 1) throw RangeError("identity needs order >= 1");
        SeriesT s(order);
        s.c_[1] = R(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int n) const {
        if (n < 0 || n > order()) throw RangeError("coefficient index out of range");
        return c_[static_cast<std::size_t>(n)];
    }
    const std::vector<R>& coeffs() const { return c_; }

    // Compositional invertibility: f(0) = 0 and f'(0) != 0.
    bool invertible() const { return order() >= 1 && c_[0].is_zero() && !c_[1].is_zero(); }

    friend bool operator==(const SeriesT& a, const SeriesT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesT& a, const SeriesT& b) { return !(a == b); }

private:
    static int check_order(int order) {
        if (order < 0) throw RangeError("series order must be >= 0");
        return order;
    }
    std::vector<R> c_;
};

using Series = SeriesT<Rational>;
using PolySeries = SeriesT<LaurentPoly>;

namespace detail {

inline void require_same_order(int a, int b, const char* what) {
    if (a != b)
        throw OrderMismatch(std::string(what) + ": orders " + std::to_string(a) + " and " +
                            std::to_string(b) + " differ");
}

}  // namespace detail

template <class R>
SeriesT<R> series_add(const SeriesT<R>& f, const SeriesT<R>& g) {
    detail::require_same_order(f.order(), g.order(), "series_add");
    std::vector<R> c;
    c.reserve(f.coeffs().size());
    for (int n = 0; n <= f.order(); ++n) c.push_back(f.coeff(n) + g.coeff(n));
    return SeriesT<R>(f.order(), std::move(c));
}

template <class R>
SeriesT<R> series_sub(const SeriesT<R>& f, const SeriesT<R>& g) {
    detail::require_same_order(f.order(), g.order(), "series_sub");
    std::vector<R> c;
    c.reserve(f.coeffs().size());
    for (int n = 0; n <= f.order(); ++n) c.push_back(f.coeff(n) - g.coeff(n));
    return SeriesT<R>(f.order(), std::move(c));
}

template <class R>
SeriesT<R> series_scale(const SeriesT<R>& f, const Rational& s) {
    std::vector<R> c;
    c.reserve(f.coeffs().size());
    for (int n = 0; n <= f.order(); ++n) c.push_back(f.coeff(n) * s);
    return SeriesT<R>(f.order(), std::move(c));
}

template <class R>
SeriesT<R> operator+(const SeriesT<R>& f, const SeriesT<R>& g) { return series_add(f, g); }
template <class R>
SeriesT<R> operator-(const SeriesT<R>& f, const SeriesT<R>& g) { return series_sub(f, g); }

// Product in the exponential convention: (fg)_n = sum C(n,k) f_k g_{n-k}.
template <class R>
SeriesT<R> series_mul(const SeriesT<R>& f, const SeriesT<R>& g) {
    detail::require_same_order(f.order(), g.order(), "series_mul");
    int N = f.order();
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        R acc{R(0)};
        for (int k = 0; k <= n; ++k)
            acc = acc + f.coeff(k) * g.coeff(n - k) *
                            Rational::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        c.push_back(std::move(acc));
    }
    return SeriesT<R>(N, std::move(c));
}

template <class R>
SeriesT<R> operator*(const SeriesT<R>& f, const SeriesT<R>& g) { return series_mul(f, g); }

// D: coefficients shift down one slot, order drops by one.
template <class R>
SeriesT<R> series_derivative(const SeriesT<R>& f) {
    if (f.order() < 1) throw OrderMismatch("series_derivative needs order >= 1");
    std::vector<R> c(f.coeffs().begin() + 1, f.coeffs().end());
    return SeriesT<R>(f.order() - 1, std::move(c));
}

// h = f o g via h_n = sum_{k=0}^{n} f_k B_{n,k}(g_1, ..., g_{n-k+1}).
template <class R>
SeriesT<R> series_compose(const SeriesT<R>& f, const SeriesT<R>& g) {
    detail::require_same_order(f.order(), g.order(), "series_compose");
    if (!g.coeff(0).is_zero())
        throw InnerConstantTerm("inner series of a composition must vanish at 0");
    int N = f.order();
    std::span<const R> gtail(g.coeffs().data() + 1, static_cast<std::size_t>(N));
    std::vector<R> c;
    c.reserve(static_cast<std::size_t>(N) + 1);
    c.push_back(f.coeff(0));
    for (int n = 1; n <= N; ++n) {
        R acc{R(0)};
        for (int k = 1; k <= n; ++k) acc = acc + f.coeff(k) * bell_eval_ring<R>(n, k, gtail);
        c.push_back(std::move(acc));
    }
    return SeriesT<R>(N, std::move(c));
}

// Compositional inverse by the order-by-order triangular solve of
// sum_k g_k B_{n,k}(h_1, ...) = delta_{n,1}.
template <class R>
SeriesT<R> series_inverse(const SeriesT<R>& g) {
    if (!g.invertible())
        throw NotInvertible("series has no compositional inverse (needs f(0)=0, f'(0)!=0)");
    int N = g.order();
    R lead_inv = g.coeff(1).reciprocal();
    std::vector<R> h;
    h.reserve(static_cast<std::size_t>(N) + 1);
    h.push_back(R(0));
    h.push_back(lead_inv);
    for (int n = 2; n <= N; ++n) {
        R acc{R(0)};
        std::span<const R> htail(h.data() + 1, h.size() - 1);
        for (int k = 2; k <= n; ++k) acc = acc + g.coeff(k) * bell_eval_ring<R>(n, k, htail);
        h.push_back(-(acc * lead_inv));
    }
    return SeriesT<R>(N, std::move(h));
}

// f(-x): coefficient n picks up (-1)^n.
template <class R>
SeriesT<R> series_negate_argument(const SeriesT<R>& f) {
    std::vector<R> c;
    c.reserve(f.coeffs().size());
    for (int n = 0; n <= f.order(); ++n) c.push_back(n % 2 == 0 ? f.coeff(n) : -f.coeff(n));
    return SeriesT<R>(f.order(), std::move(c));
}

// g^k / k! at g's order.
template <class R>
SeriesT<R> series_power_over_factorial(const SeriesT<R>& g, int k) {
    if (k < 0) throw RangeError("series_power_over_factorial needs k >= 0");
    SeriesT<R> acc = SeriesT<R>::constant(g.order(), R(1));
    for (int i = 0; i < k; ++i) acc = series_mul(acc, g);
    return series_scale(acc, Rational::factorial(static_cast<unsigned>(k)).reciprocal());
}

template <class R>
bool is_involution(const SeriesT<R>& f) {
    if (!f.invertible()) throw NotInvertible("is_involution needs an invertible series");
    return series_compose(f, f) == SeriesT<R>::identity(f.order());
}

template <class R>
bool is_odd(const SeriesT<R>& f) {
    for (int n = 0; n <= f.order(); n += 2)
        if (!f.coeff(n).is_zero()) return false;
    return true;
}

template <class R>
SeriesT<R> series_truncate(const SeriesT<R>& f, int order) {
    if (order > f.order()) throw OrderMismatch("cannot truncate to a higher order");
    std::vector<R> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
    return SeriesT<R>(order, std::move(c));
}

// Display helpers: ordinary coefficients are f_n / n!.
std::vector<Rational> to_ordinary(const Series& f);
Series from_ordinary(int order, std::span<const Rational> ordinary);

std::string series_str(const Series& f);

}  // namespace invoser
