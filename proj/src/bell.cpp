#include "invoser/bell.hpp"

#include <string>

namespace invoser {

namespace {

void recurse_parts(int part, int n_rem, int k_rem, std::vector<int>& counts,
                   const std::function<void(const std::vector<int>&)>& visit) {
    if (part == 0) {
        if (n_rem == 0 && k_rem == 0) visit(counts);
        return;
    }
    // Remaining parts are sized 1..part: k_rem <= n_rem <= k_rem*part.
    if (n_rem < k_rem || n_rem > k_rem * part) return;
    if (part == 1) {
        counts[0] = k_rem;
        visit(counts);
        counts[0] = 0;
        return;
    }
    int max_c = std::min(k_rem, n_rem / part);
    for (int c = 0; c <= max_c; ++c) {
        counts[part - 1] = c;
        recurse_parts(part - 1, n_rem - c * part, k_rem - c, counts, visit);
    }
    counts[part - 1] = 0;
}

}  // namespace

void for_each_partition(int n, int k,
                        const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1 || k < 1 || k > n) throw RangeError("partition enumeration requires 1 <= k <= n");
    int m = n - k + 1;  // largest usable part size
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    recurse_parts(m, n, k, counts, visit);
}

std::vector<PartitionMultiplicity> enumerate_partitions(int n, int k) {
    std::vector<PartitionMultiplicity> out;
    for_each_partition(n, k, [&](const std::vector<int>& counts) {
        out.push_back(PartitionMultiplicity{counts});
    });
    return out;
}

Rational partition_coefficient(int n, const std::vector<int>& counts) {
    Rational den(1);
    for (std::size_t j = 0; j < counts.size(); ++j) {
        int c = counts[j];
        if (c == 0) continue;
        den *= Rational::factorial(static_cast<unsigned>(c));
        den *= Rational::factorial(static_cast<unsigned>(j + 1)).pow(c);
    }
    return Rational::factorial(static_cast<unsigned>(n)) / den;
}

Rational bell_eval(int n, int k, std::span<const Rational> args) {
    return bell_eval_ring<Rational>(n, k, args);
}

const LaurentPoly& TriangleTable::at(int n, int k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(rows_.size()) < n) {
        int next = static_cast<int>(rows_.size()) + 1;
        rows_.push_back(fill_(next));
    }
    return rows_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1];
}

namespace {

std::vector<LaurentPoly> fill_bell_row(int n) {
    std::vector<LaurentPoly> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        LaurentPoly p;
        for_each_partition(n, k, [&](const std::vector<int>& counts) {
            Monomial m;
            for (std::size_t j = 0; j < counts.size(); ++j) {
                if (counts[j] > 0)
                    m = m * Monomial::variable(static_cast<int>(j) + 1, counts[j]);
            }
            p += LaurentPoly::term(partition_coefficient(n, counts), m);
        });
        row.push_back(std::move(p));
    }
    return row;
}

TriangleTable& bell_table() {
    static TriangleTable table(fill_bell_row);
    return table;
}

const LaurentPoly& poly_zero() {
    static const LaurentPoly zero;
    return zero;
}

const LaurentPoly& poly_one() {
    static const LaurentPoly one(1);
    return one;
}

}  // namespace

const LaurentPoly& bell_poly(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw RangeError("bell_poly(n,k) requires 0 <= k <= n");
    if (k == 0) return n == 0 ? poly_one() : poly_zero();
    return bell_table().at(n, k);
}

bool bell_homogeneity_check(int n, int k, const Rational& lambda,
                            std::span<const Rational> args) {
    std::vector<Rational> scaled(args.begin(), args.end());
    for (auto& a : scaled) a *= lambda;
    return bell_eval(n, k, scaled) == lambda.pow(k) * bell_eval(n, k, args);
}

}  // namespace invoser
