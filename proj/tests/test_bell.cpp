#include <doctest.h>

#include <algorithm>
#include <thread>
#include <vector>

#include "invoser/bell.hpp"
#include "invoser/rng.hpp"
#include "invoser/series.hpp"
#include "oracles.hpp"

using namespace invoser;

TEST_SUITE_BEGIN("bell");

TEST_CASE("partition enumeration for (4,2)") {
    auto parts = enumerate_partitions(4, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].counts == std::vector<int>{0, 2, 0});
    CHECK(parts[1].counts == std::vector<int>{1, 0, 1});
}

TEST_CASE("partition enumeration degenerate shapes") {
    for (int n = 1; n <= 6; ++n) {
        auto full = enumerate_partitions(n, n);
        REQUIRE(full.size() == 1);
        CHECK(full[0].counts == std::vector<int>{n});

        auto single = enumerate_partitions(n, 1);
        REQUIRE(single.size() == 1);
        std::vector<int> expected(static_cast<std::size_t>(n), 0);
        expected.back() = 1;
        CHECK(single[0].counts == expected);
    }
    CHECK_THROWS_AS(enumerate_partitions(3, 0), RangeError);
    CHECK_THROWS_AS(enumerate_partitions(3, 4), RangeError);
}

TEST_CASE("partition enumeration matches the odometer oracle") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto got = enumerate_partitions(n, k);
            auto expected = oracles::brute_force_partitions(n, k);
            REQUIRE(got.size() == expected.size());
            std::vector<std::vector<int>> got_vecs;
            for (const auto& p : got) got_vecs.push_back(p.counts);
            std::vector<std::vector<int>> sorted_got = got_vecs;
            std::sort(sorted_got.begin(), sorted_got.end());
            CHECK(std::adjacent_find(sorted_got.begin(), sorted_got.end()) == sorted_got.end());
            std::sort(expected.begin(), expected.end());
            CHECK(sorted_got == expected);
        }
    }
}

TEST_CASE("symbolic polynomials, boundary columns") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(bell_poly(n, 1) == LaurentPoly::variable(n));
        CHECK(bell_poly(n, n) == LaurentPoly::variable(1, n));
    }
    CHECK(bell_poly(0, 0) == LaurentPoly(1));
    CHECK(bell_poly(5, 0).is_zero());
    CHECK_THROWS_AS(bell_poly(2, 3), RangeError);
}

TEST_CASE("B_{4,2} from the generic series oracle") {
    // Coefficient 4 of g^2/2! for the fully generic series g = sum X_n x^n/n!.
    std::vector<LaurentPoly> generic = {LaurentPoly(0)};
    for (int j = 1; j <= 4; ++j) generic.push_back(LaurentPoly::variable(j));
    PolySeries g(4, generic);
    PolySeries half_sq = series_power_over_factorial(g, 2);
    CHECK(half_sq.coeff(4) == bell_poly(4, 2));

    LaurentPoly expected = LaurentPoly::variable(2, 2) * Rational(3) +
                           LaurentPoly::variable(1) * LaurentPoly::variable(3) * Rational(4);
    CHECK(bell_poly(4, 2) == expected);
}

TEST_CASE("symbolic and streamed paths agree with the series oracle") {
    RationalRng rng(51);
    for (int n = 1; n <= 12; ++n) {
        std::vector<Rational> gtail = rng.args(n);
        std::vector<Rational> coeffs = gtail;
        coeffs.insert(coeffs.begin(), Rational(0));
        Series g(n, coeffs);
        for (int k = 1; k <= n; ++k) {
            Rational streamed = bell_eval(n, k, gtail);
            Rational symbolic = bell_poly(n, k).eval(gtail);
            Rational via_series = series_power_over_factorial(g, k).coeff(n);
            CHECK(streamed == symbolic);
            CHECK(streamed == via_series);
        }
    }
}

TEST_CASE("evaluation") {
    std::vector<Rational> ones(5, Rational(1));
    CHECK(bell_eval(5, 3, ones) == Rational(25));
    CHECK(bell_eval(5, 3, ones) == oracles::stirling2(5, 3));

    std::vector<Rational> minus_one = {Rational(-1)};
    CHECK(bell_eval(3, 3, minus_one) == Rational(-1));

    RationalRng rng(52);
    Rational a = rng.small();
    std::vector<Rational> args = {Rational(-1), a};
    CHECK(bell_eval(2, 1, args) == a);

    CHECK_THROWS_AS(bell_eval(4, 2, std::span<const Rational>(ones.data(), 2)), ArityError);
    CHECK_THROWS_AS(bell_eval(2, 3, ones), RangeError);
}

TEST_CASE("column sums against the Stirling-2 recurrence") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
        for (int k = 1; k <= n; ++k) CHECK(bell_eval(n, k, ones) == oracles::stirling2(n, k));
    }
}

TEST_CASE("homogeneity of degree k") {
    std::vector<Rational> ones = {Rational(1), Rational(1), Rational(1)};
    CHECK(bell_homogeneity_check(4, 2, Rational(1), ones));
    CHECK(bell_homogeneity_check(4, 2, Rational(2), ones));
    std::vector<Rational> twos = {Rational(2), Rational(2), Rational(2)};
    CHECK(bell_eval(4, 2, twos) == Rational(28));  // 2^2 * 7

    RationalRng rng(53);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + static_cast<int>(rng.next_seed() % 9);
        int k = 1 + static_cast<int>(rng.next_seed() % static_cast<unsigned>(n));
        std::vector<Rational> args = rng.args(n - k + 1);
        CHECK(bell_homogeneity_check(n, k, rng.small_nonzero(), args));
        CHECK(bell_homogeneity_check(n, n, rng.small_nonzero(), args));
    }
}

TEST_CASE("Jabotinsky second composition rule") {
    RationalRng rng(54);
    for (int trial = 0; trial < 8; ++trial) {
        Series u = rng.invertible_series(10);
        Series v = rng.invertible_series(10);
        Series p = series_compose(v, u);
        std::vector<Rational> ut(u.coeffs().begin() + 1, u.coeffs().end());
        std::vector<Rational> vt(v.coeffs().begin() + 1, v.coeffs().end());
        std::vector<Rational> pt(p.coeffs().begin() + 1, p.coeffs().end());
        for (int n = 1; n <= 10; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational sum(0);
                for (int j = k; j <= n; ++j) sum += bell_eval(n, j, ut) * bell_eval(j, k, vt);
                CHECK(sum == bell_eval(n, k, pt));
            }
        }
    }
}

TEST_CASE("memoized table is safe under concurrent readers") {
    std::vector<std::thread> threads;
    std::vector<LaurentPoly> results(8);
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&results, t]() { results[static_cast<std::size_t>(t)] = bell_poly(11, 1 + t % 11); });
    }
    for (auto& th : threads) th.join();
    for (int t = 0; t < 8; ++t)
        CHECK(results[static_cast<std::size_t>(t)] == bell_poly(11, 1 + t % 11));
}

TEST_SUITE_END();
