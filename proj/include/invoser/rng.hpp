#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "invoser/rational.hpp"
#include "invoser/series.hpp"

namespace invoser {

// Deterministic source of small rationals for the randomized identity suites:
// numerators in [-9, 9], denominators in [1, 4]; leading coefficients are
// resampled until nonzero. Small values keep the exact arithmetic fast while
// the fixed seed keeps every run reproducible.
class RationalRng {
public:
    explicit RationalRng(std::uint64_t seed) : eng_(seed) {}

    Rational small() {
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(num(eng_)) / Rational(den(eng_));
    }

    Rational small_nonzero() {
        Rational q = small();
        while (q.is_zero()) q = small();
        return q;
    }

    // count values with a nonzero first entry, e.g. arguments X1.. of a
    // Laurent evaluation.
    std::vector<Rational> args(int count) {
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(count));
        v.push_back(small_nonzero());
        for (int i = 1; i < count; ++i) v.push_back(small());
        return v;
    }

    // Invertible series: c0 = 0, c1 != 0.
    Series invertible_series(int order) {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(order) + 1);
        c.emplace_back(0);
        c.push_back(small_nonzero());
        for (int n = 2; n <= order; ++n) c.push_back(small());
        return Series(order, std::move(c));
    }

    // Series with no constant-term restriction (used as outer factors).
    Series any_series(int order) {
        std::vector<Rational> c;
        c.reserve(static_cast<std::size_t>(order) + 1);
        for (int n = 0; n <= order; ++n) c.push_back(small());
        return Series(order, std::move(c));
    }

    // Invertible odd series: zero even coefficients, c1 != 0.
    Series odd_series(int order) {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
        if (order >= 1) c[1] = small_nonzero();
        for (int n = 3; n <= order; n += 2) c[static_cast<std::size_t>(n)] = small();
        return Series(order, std::move(c));
    }

    std::uint64_t next_seed() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace invoser
