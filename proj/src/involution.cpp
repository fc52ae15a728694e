#include "invoser/involution.hpp"

#include <string>

#include "invoser/stirling_lah.hpp"

namespace invoser {

Series involution_from_even_seeds(const SeedSpec& seeds, int order) {
    if (seeds.kind != SeedSpec::Kind::EvenSeeds)
        throw RangeError("involution_from_even_seeds expects even seeds");
    return involution_from_even_seeds_ring<Rational>(seeds.values, order);
}

PolySeries involution_from_even_seeds_symbolic(int seed_count, int order) {
    std::vector<LaurentPoly> seeds;
    seeds.reserve(static_cast<std::size_t>(seed_count));
    for (int k = 1; k <= seed_count; ++k) seeds.push_back(LaurentPoly::variable(k));
    return involution_from_even_seeds_ring<LaurentPoly>(seeds, order);
}

CheckReport involution_check_report(const Series& f) {
    if (!f.invertible())
        throw NotInvertible("involution check needs an invertible series");
    CheckReport report{.name = "involution-coefficients"};
    std::span<const Rational> args(f.coeffs().data() + 1, static_cast<std::size_t>(f.order()));
    for (int n = 1; n <= f.order(); ++n) {
        Rational sum(0);
        for (int k = 1; k <= n; ++k) sum += f.coeff(k) * bell_eval(n, k, args);
        ++report.checks;
        Rational expected(n == 1 ? 1 : 0);
        if (sum != expected)
            report.note_failure("n=" + std::to_string(n) + ": got " + sum.str() +
                                ", expected " + expected.str());
    }
    return report;
}

Series involution_from_conjugator(const Series& g) {
    if (!g.invertible())
        throw NotInvertible("conjugation needs an invertible series");
    int N = g.order();
    std::span<const Rational> args(g.coeffs().data() + 1, static_cast<std::size_t>(N));
    std::vector<Rational> f(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int n = 1; n <= N; ++n) f[static_cast<std::size_t>(n)] = lah_eval(n, 1, args);
    return Series(N, std::move(f));
}

Series conjugator_from_involution(const Series& f, const SeedSpec& odd_seeds) {
    if (odd_seeds.kind != SeedSpec::Kind::OddSeeds)
        throw RangeError("conjugator_from_involution expects odd seeds");
    if (!f.invertible())
        throw NotInvertible("conjugator extraction needs an invertible series");
    int N = f.order();
    if (f == Series::identity(N))
        throw TrivialInvolution("the identity is not conjugate to the negated identity");
    if (!is_involution(f)) throw NotInvolution("input series is not involutory");
    if (odd_seeds.values.empty() || odd_seeds.values[0].is_zero())
        throw ZeroLeadingSeed("the leading odd seed g_1 must be nonzero");

    std::vector<Rational> g(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int n = 1; n <= N; n += 2) {
        std::size_t i = static_cast<std::size_t>(n / 2);
        g[static_cast<std::size_t>(n)] =
            i < odd_seeds.values.size() ? odd_seeds.values[i] : Rational(0);
    }
    Rational half(1, 2);
    for (int n = 2; n <= N; n += 2) {
        Rational acc(0);
        std::span<const Rational> args(g.data() + 1, static_cast<std::size_t>(n) - 1);
        for (int k = 2; k <= n; ++k) acc += f.coeff(k) * bell_eval(n, k, args);
        g[static_cast<std::size_t>(n)] = acc * half;
    }
    return Series(N, std::move(g));
}

OddTransfer same_involution_iff_odd_transfer(const Series& g, const Series& h) {
    if (!g.invertible() || !h.invertible())
        throw NotInvertible("odd-transfer test needs invertible series");
    Series psi = series_compose(series_inverse(g), h);
    bool equal = involution_from_conjugator(g) == involution_from_conjugator(h);
    if (equal != is_odd(psi))
        throw Error("odd-transfer criterion violated; conjugation machinery is inconsistent");
    return OddTransfer{equal, std::move(psi)};
}

std::optional<Series> coefficient_form_check(const Series& f) {
    if (!f.invertible()) return std::nullopt;
    int N = f.order();
    if (f == Series::identity(N)) return std::nullopt;
    if (!is_involution(f)) return std::nullopt;
    Series g = conjugator_from_involution(f, SeedSpec::odd({Rational(1)}));
    if (involution_from_conjugator(g) != f)
        throw Error("coefficient-form witness failed to reproduce the involution");
    return g;
}

}  // namespace invoser
