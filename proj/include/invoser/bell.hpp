#pragma once

#include <functional>
#include <mutex>
#include <span>
#include <vector>

#include "invoser/errors.hpp"
#include "invoser/laurent.hpp"
#include "invoser/rational.hpp"

namespace invoser {

// Multiplicity vector of one partition of n into k parts: counts[j-1] parts of
// size j, with sum(counts) == k and sum(j*counts[j-1]) == n.
struct PartitionMultiplicity {
    std::vector<int> counts;

    friend bool operator==(const PartitionMultiplicity& a, const PartitionMultiplicity& b) {
        return a.counts == b.counts;
    }
};

// All multiplicity vectors for (n, k), each exactly once, in a deterministic
// order (multiplicity of the largest part size chosen first, ascending).
std::vector<PartitionMultiplicity> enumerate_partitions(int n, int k);

// Streaming variant; visit(counts) is called once per partition.
void for_each_partition(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

// n! / (prod_j counts[j-1]! * (j!)^counts[j-1]), the monomial coefficient.
Rational partition_coefficient(int n, const std::vector<int>& counts);

namespace detail {

template <class R>
R ring_pow(const R& base, int e) {
    R r{R(1)};
    R b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

}  // namespace detail

// Streamed evaluation of the partial Bell polynomial over any coefficient ring
// (Rational or LaurentPoly): the sum is accumulated directly, the symbolic
// polynomial is never built.
template <class R>
R bell_eval_ring(int n, int k, std::span<const R> args) {
    if (n < 0 || k < 0 || k > n) throw RangeError("bell(n,k) requires 0 <= k <= n");
    if (k == 0) return n == 0 ? R(1) : R(0);
    int needed = n - k + 1;
    if (static_cast<int>(args.size()) < needed)
        throw ArityError("bell(" + std::to_string(n) + "," + std::to_string(k) + ") needs " +
                         std::to_string(needed) + " arguments, got " + std::to_string(args.size()));
    R total{R(0)};
    for_each_partition(n, k, [&](const std::vector<int>& counts) {
        R term{R(1)};
        for (std::size_t j = 0; j < counts.size(); ++j) {
            if (counts[j] > 0) term = term * detail::ring_pow(args[j], counts[j]);
        }
        total = total + term * partition_coefficient(n, counts);
    });
    return total;
}

// Exact rational evaluation without materializing the polynomial.
Rational bell_eval(int n, int k, std::span<const Rational> args);

// Symbolic B_{n,k}; memoized, safe under concurrent callers. B_{0,0} = 1 and
// B_{n,0} = 0 for n >= 1.
const LaurentPoly& bell_poly(int n, int k);

// True iff B_{n,k}(lambda * args) == lambda^k * B_{n,k}(args).
bool bell_homogeneity_check(int n, int k, const Rational& lambda, std::span<const Rational> args);

// Memoized (n,k)-triangle of symbolic polynomials. Rows are filled lazily in
// order under an internal lock; filled entries are immutable, so returned
// references stay valid and reads never block each other after the fill.
class TriangleTable {
public:
    // fill(n) computes row n, entries k = 1..n.
    using RowFill = std::function<std::vector<LaurentPoly>(int)>;

    explicit TriangleTable(RowFill fill) : fill_(std::move(fill)) {}

    const LaurentPoly& at(int n, int k);

private:
    std::mutex mu_;
    std::vector<std::vector<LaurentPoly>> rows_;
    RowFill fill_;
};

}  // namespace invoser
