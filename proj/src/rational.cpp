#include "invoser/rational.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <vector>

namespace invoser {

// mpz_class has no long long constructor; route through decimal text.
Rational::Rational(long long n) : v_(mpz_class(std::to_string(n))) {}

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw JsonFormatError("empty rational literal");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw JsonFormatError("bad rational literal: " + text);
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw JsonFormatError("bad rational literal: " + text);
    mpz_class d(den);
    if (d == 0) throw DivisionByZero("rational literal with zero denominator: " + text);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw DivisionByZero("zero raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
    mpq_class r(num, den);
    r.canonicalize();
    Rational out(r);
    return invert ? out.reciprocal() : out;
}

namespace {

// Shared factorial cache; entries are immutable once written.
std::vector<mpz_class>& factorial_cache() {
    static std::vector<mpz_class> cache{mpz_class(1)};
    return cache;
}
std::mutex factorial_mutex;

}  // namespace

Rational Rational::factorial(unsigned n) {
    std::lock_guard<std::mutex> lock(factorial_mutex);
    auto& cache = factorial_cache();
    while (cache.size() <= n) {
        mpz_class next = cache.back() * static_cast<unsigned long>(cache.size());
        cache.push_back(next);
    }
    return Rational(cache[n]);
}

Rational Rational::binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace invoser
