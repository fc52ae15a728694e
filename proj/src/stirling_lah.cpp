#include "invoser/stirling_lah.hpp"

#include <string>
#include <vector>

#include "invoser/series.hpp"

namespace invoser {

namespace {

// Row n of the A-triangle, solved for k = n down to 1:
//   A_{n,n} = X1^{-n},
//   A_{n,k} = X1^{-k} * (delta_{n,k} - sum_{j=k+1}^{n} A_{n,j} B_{j,k}).
std::vector<LaurentPoly> fill_stirling_row(int n) {
    std::vector<LaurentPoly> row(static_cast<std::size_t>(n));
    row[static_cast<std::size_t>(n) - 1] = LaurentPoly::variable(1, -n);
    for (int k = n - 1; k >= 1; --k) {
        LaurentPoly sum;
        for (int j = k + 1; j <= n; ++j)
            sum += row[static_cast<std::size_t>(j) - 1] * bell_poly(j, k);
        row[static_cast<std::size_t>(k) - 1] = (-sum) * LaurentPoly::variable(1, -k);
    }
    return row;
}

TriangleTable& stirling_table() {
    static TriangleTable table(fill_stirling_row);
    return table;
}

std::vector<LaurentPoly> fill_lah_row(int n) {
    std::vector<LaurentPoly> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        LaurentPoly sum;
        for (int j = k; j <= n; ++j) {
            LaurentPoly term = stirling_first_poly(n, j) * bell_poly(j, k);
            sum += (j % 2 == 0) ? term : -term;
        }
        row.push_back(std::move(sum));
    }
    return row;
}

TriangleTable& lah_table() {
    static TriangleTable table(fill_lah_row);
    return table;
}

void require_triangle_range(int n, int k, const char* what) {
    if (k < 1 || k > n) throw RangeError(std::string(what) + " requires 1 <= k <= n");
}

}  // namespace

const LaurentPoly& stirling_first_poly(int n, int k) {
    require_triangle_range(n, k, "stirling_first_poly");
    return stirling_table().at(n, k);
}

LaurentPoly stirling_first_via_inverse(int n, int k) {
    require_triangle_range(n, k, "stirling_first_via_inverse");
    // Invert the generic series sum X_n x^n / n! symbolically; its n-th
    // coefficient is A_{n,1}.
    int m = n - k + 1;
    std::vector<LaurentPoly> generic;
    generic.reserve(static_cast<std::size_t>(m) + 1);
    generic.emplace_back();
    for (int j = 1; j <= m; ++j) generic.push_back(LaurentPoly::variable(j));
    PolySeries inv = series_inverse(PolySeries(m, std::move(generic)));
    std::vector<LaurentPoly> column_one(inv.coeffs().begin() + 1, inv.coeffs().end());
    return bell_poly(n, k).substitute(column_one);
}

const LaurentPoly& lah_poly(int n, int k) {
    require_triangle_range(n, k, "lah_poly");
    return lah_table().at(n, k);
}

Rational lah_eval(int n, int k, std::span<const Rational> args) {
    require_triangle_range(n, k, "lah_eval");
    if (args.empty() || args[0].is_zero())
        throw ZeroAtPole("lah_eval requires a nonzero first argument");
    return lah_poly(n, k).eval(args);
}

CheckReport check_ortho_inversion(int max_n) {
    CheckReport report{.name = "ortho-inversion"};
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            LaurentPoly sum;
            for (int j = k; j <= n; ++j) sum += stirling_first_poly(n, j) * bell_poly(j, k);
            ++report.checks;
            LaurentPoly expected(n == k ? 1 : 0);
            if (sum != expected)
                report.note_failure("(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                    "): got " + sum.str());
        }
    }
    return report;
}

CheckReport check_lah_selfinverse(int max_n) {
    CheckReport report{.name = "lah-selfinverse"};
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            LaurentPoly sum;
            for (int j = k; j <= n; ++j) sum += lah_poly(n, j) * lah_poly(j, k);
            ++report.checks;
            LaurentPoly expected(n == k ? 1 : 0);
            if (sum != expected)
                report.note_failure("(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                                    "): got " + sum.str());
        }
    }
    return report;
}

CheckReport check_lah_bell_representability(int max_n) {
    CheckReport report{.name = "lah-bell-representability"};
    for (int n = 1; n <= max_n; ++n) {
        std::vector<LaurentPoly> column_one;
        column_one.reserve(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) column_one.push_back(lah_poly(j, 1));
        for (int k = 1; k <= n; ++k) {
            ++report.checks;
            LaurentPoly rhs = bell_poly(n, k).substitute(
                std::span<const LaurentPoly>(column_one.data(), static_cast<std::size_t>(n - k + 1)));
            if (rhs != lah_poly(n, k))
                report.note_failure("(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
        }
    }
    return report;
}

CheckReport check_lah_lemma(int max_n) {
    CheckReport report{.name = "lah-lemma"};
    for (int n = 2; n <= max_n; ++n) {
        std::vector<LaurentPoly> column_one;
        for (int j = 1; j <= n; ++j) column_one.push_back(lah_poly(j, 1));
        LaurentPoly sum;
        for (int k = 2; k <= n - 1; ++k) {
            sum += lah_poly(k, 1) *
                   bell_poly(n, k).substitute(std::span<const LaurentPoly>(
                       column_one.data(), static_cast<std::size_t>(n - k + 1)));
        }
        ++report.checks;
        int parity = (n % 2 == 0) ? 0 : 2;  // 1 + (-1)^{n+1}
        LaurentPoly expected = lah_poly(n, 1) * Rational(parity);
        if (sum != expected) report.note_failure("n=" + std::to_string(n) + ": got " + sum.str());
    }
    return report;
}

CheckReport check_inversion_of_sequences(int max_n) {
    CheckReport report{.name = "inversion-of-sequences"};
    for (int n = 1; n <= max_n; ++n) {
        LaurentPoly sum;
        for (int k = 1; k <= n; ++k) sum += lah_poly(k, 1) * bell_poly(n, k);
        ++report.checks;
        LaurentPoly expected = LaurentPoly::variable(n) * Rational(n % 2 == 0 ? 1 : -1);
        if (sum != expected) report.note_failure("n=" + std::to_string(n) + ": got " + sum.str());
    }
    return report;
}

bool lah_parity_support_check(int n) {
    if (n < 1) throw RangeError("lah_parity_support_check requires n >= 1");
    if (n % 2 == 0) return true;
    return !lah_poly(n, 1).mentions_variable(n);
}

}  // namespace invoser
