#pragma once

#include <optional>
#include <span>
#include <vector>

#include "invoser/rational.hpp"
#include "invoser/report.hpp"
#include "invoser/series.hpp"

namespace invoser {

// Free parameters driving the two constructions: EvenSeeds lists a_k = f_{2k}
// for the involution generator, OddSeeds lists g_1, g_3, g_5, ... for the
// conjugator recursion (first entry nonzero).
struct SeedSpec {
    enum class Kind { EvenSeeds, OddSeeds };

    Kind kind;
    std::vector<Rational> values;

    static SeedSpec even(std::vector<Rational> values) {
        return SeedSpec{Kind::EvenSeeds, std::move(values)};
    }
    static SeedSpec odd(std::vector<Rational> values) {
        return SeedSpec{Kind::OddSeeds, std::move(values)};
    }
};

// Builds the involution determined by the free even-indexed coefficients:
// f_1 = -1, f_{2k} = a_k, and for odd n >= 3
//   f_n = 1/2 * sum_{k=2}^{n-1} f_k B_{n,k}(-1, f_2, ..., f_{n-k+1}).
// Works over any coefficient ring so the same recursion also produces the
// closed forms of f_3, f_5, ... as polynomials in the seeds.
template <class R>
SeriesT<R> involution_from_even_seeds_ring(std::span<const R> seeds, int order) {
    if (order < 1) throw RangeError("involution generation needs order >= 1");
    int needed = order / 2;
    if (static_cast<int>(seeds.size()) < needed)
        throw InsufficientSeeds("order " + std::to_string(order) + " needs " +
                                std::to_string(needed) + " even seeds, got " +
                                std::to_string(seeds.size()));
    std::vector<R> f(static_cast<std::size_t>(order) + 1, R(0));
    f[1] = R(-1);
    for (int n = 2; n <= order; n += 2) f[static_cast<std::size_t>(n)] = seeds[n / 2 - 1];
    Rational half(1, 2);
    for (int n = 3; n <= order; n += 2) {
        R acc{R(0)};
        std::span<const R> args(f.data() + 1, static_cast<std::size_t>(n) - 1);
        for (int k = 2; k <= n - 1; ++k)
            acc = acc + f[static_cast<std::size_t>(k)] * bell_eval_ring<R>(n, k, args);
        f[static_cast<std::size_t>(n)] = acc * half;
    }
    return SeriesT<R>(order, std::move(f));
}

Series involution_from_even_seeds(const SeedSpec& seeds, int order);

// Same recursion with symbolic seeds a_k = X_k, exposing the closed forms of
// the odd coefficients as polynomials in the free constants.
PolySeries involution_from_even_seeds_symbolic(int seed_count, int order);

// Verifies sum_{k=1}^{n} f_k B_{n,k}(f_1, ..., f_{n-k+1}) = delta_{n,1} for
// each n <= order; the report is empty exactly when f is involutory.
CheckReport involution_check_report(const Series& f);

// The involution conjugate to -id by g: coefficients are L_{n,1} evaluated at
// g's coefficients (equivalently g o (-id) o g^{-1}).
Series involution_from_conjugator(const Series& g);

// Constructive decomposition: given involutory f != id and free odd-indexed
// seeds (g_1 != 0), the even coefficients follow from
//   g_n = 1/2 * sum_{k=2}^{n} f_k B_{n,k}(g_1, ..., g_{n-k+1}).
// The result satisfies involution_from_conjugator(g) == f.
Series conjugator_from_involution(const Series& f, const SeedSpec& odd_seeds);

struct OddTransfer {
    bool equal;   // do g and h conjugate -id to the same involution?
    Series psi;   // the transfer g^{-1} o h; odd exactly when equal
};

// Two conjugators produce the same involution iff their transfer is odd.
OddTransfer same_involution_iff_odd_transfer(const Series& g, const Series& h);

// For an involutory f != id, returns a canonical witness g (odd seeds 1,0,0,...)
// with f_n = L_{n,1}(g_1, g_2, ...) for every n; nullopt when f is not a
// nontrivial involution.
std::optional<Series> coefficient_form_check(const Series& f);

}  // namespace invoser
