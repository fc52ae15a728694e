#include "invoser/verify.hpp"

#include <algorithm>

#include "invoser/bell.hpp"
#include "invoser/rng.hpp"
#include "invoser/series.hpp"
#include "invoser/stirling_lah.hpp"

namespace invoser {

namespace {

std::string at(int n, int k, int trial = -1) {
    std::string s = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    if (trial >= 0) s += " trial " + std::to_string(trial);
    return s;
}

// Numeric spot-checks evaluate the same identities at random rational points;
// they stand in for the symbolic checks where the polynomials get large.
void ortho_numeric(CheckReport& r, const VerifyOptions& opt) {
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        for (int n = 1; n <= opt.numeric_max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational sum(0);
                for (int j = k; j <= n; ++j)
                    sum += stirling_first_poly(n, j).eval(g) * bell_eval(j, k, g);
                ++r.checks;
                if (sum != Rational(n == k ? 1 : 0)) r.note_failure("numeric " + at(n, k, t));
            }
        }
    }
}

CheckReport suite_ortho(const VerifyOptions& opt) {
    CheckReport r = check_ortho_inversion(opt.sym_max_n);
    ortho_numeric(r, opt);
    return r;
}

CheckReport suite_selfinv(const VerifyOptions& opt) {
    CheckReport r = check_lah_selfinverse(opt.sym_max_n);
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        for (int n = 1; n <= opt.numeric_max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational sum(0);
                for (int j = k; j <= n; ++j)
                    sum += lah_poly(n, j).eval(g) * lah_poly(j, k).eval(g);
                ++r.checks;
                if (sum != Rational(n == k ? 1 : 0)) r.note_failure("numeric " + at(n, k, t));
            }
        }
    }
    return r;
}

CheckReport suite_bellrep(const VerifyOptions& opt) {
    CheckReport r = check_lah_bell_representability(opt.sym_max_n);
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        std::vector<Rational> column_one;
        for (int j = 1; j <= opt.numeric_max_n; ++j) column_one.push_back(lah_poly(j, 1).eval(g));
        for (int n = 1; n <= opt.numeric_max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                ++r.checks;
                if (lah_poly(n, k).eval(g) != bell_eval(n, k, column_one))
                    r.note_failure("numeric " + at(n, k, t));
            }
        }
    }
    return r;
}

CheckReport suite_lemma(const VerifyOptions& opt) {
    CheckReport r = check_lah_lemma(opt.sym_max_n);
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        std::vector<Rational> column_one;
        for (int j = 1; j <= opt.numeric_max_n; ++j) column_one.push_back(lah_poly(j, 1).eval(g));
        for (int n = 2; n <= opt.numeric_max_n; ++n) {
            Rational sum(0);
            for (int k = 2; k <= n - 1; ++k)
                sum += column_one[static_cast<std::size_t>(k) - 1] * bell_eval(n, k, column_one);
            ++r.checks;
            Rational expected = Rational(n % 2 == 0 ? 0 : 2) *
                                column_one[static_cast<std::size_t>(n) - 1];
            if (sum != expected) r.note_failure("numeric n=" + std::to_string(n) +
                                                " trial " + std::to_string(t));
        }
    }
    return r;
}

CheckReport suite_seqinv(const VerifyOptions& opt) {
    CheckReport r = check_inversion_of_sequences(opt.sym_max_n);
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        for (int n = 1; n <= opt.numeric_max_n; ++n) {
            Rational sum(0);
            for (int k = 1; k <= n; ++k) sum += lah_poly(k, 1).eval(g) * bell_eval(n, k, g);
            ++r.checks;
            Rational expected = g[static_cast<std::size_t>(n) - 1] * Rational(n % 2 == 0 ? 1 : -1);
            if (sum != expected) r.note_failure("numeric n=" + std::to_string(n) +
                                                " trial " + std::to_string(t));
        }
    }
    return r;
}

// Composition both ways: coefficients of f o g against the Bell sums with the
// symbolic triangle, Eq-style route distinct from the streamed one inside
// series_compose.
CheckReport suite_faadibruno(const VerifyOptions& opt) {
    CheckReport r{.name = "faa-di-bruno"};
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        Series f = rng.any_series(opt.order);
        Series g = rng.invertible_series(opt.order);
        Series h = series_compose(f, g);
        std::vector<Rational> gtail(g.coeffs().begin() + 1, g.coeffs().end());
        for (int n = 1; n <= opt.order; ++n) {
            Rational sum(0);
            for (int k = 0; k <= n; ++k) sum += f.coeff(k) * bell_poly(n, k).eval(gtail);
            ++r.checks;
            if (sum != h.coeff(n))
                r.note_failure("trial " + std::to_string(t) + " n=" + std::to_string(n));
        }
    }
    return r;
}

CheckReport suite_dual(const VerifyOptions& opt) {
    CheckReport r{.name = "dual-faa-di-bruno"};
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        Series f = rng.any_series(opt.order);
        Series g = rng.invertible_series(opt.order);
        Series h = series_compose(f, series_inverse(g));
        std::vector<Rational> gtail(g.coeffs().begin() + 1, g.coeffs().end());
        for (int n = 1; n <= opt.order; ++n) {
            Rational sum(0);
            for (int k = 1; k <= n; ++k) sum += f.coeff(k) * stirling_first_poly(n, k).eval(gtail);
            ++r.checks;
            if (sum != h.coeff(n))
                r.note_failure("trial " + std::to_string(t) + " n=" + std::to_string(n));
        }
    }
    return r;
}

// Second composition rule: B_{n,k} of (v o u)'s coefficients expands through
// the triangle products of u's and v's coefficients.
CheckReport suite_jabotinsky(const VerifyOptions& opt) {
    CheckReport r{.name = "jabotinsky"};
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        Series u = rng.invertible_series(opt.order);
        Series v = rng.invertible_series(opt.order);
        Series p = series_compose(v, u);
        std::vector<Rational> utail(u.coeffs().begin() + 1, u.coeffs().end());
        std::vector<Rational> vtail(v.coeffs().begin() + 1, v.coeffs().end());
        std::vector<Rational> ptail(p.coeffs().begin() + 1, p.coeffs().end());
        for (int n = 1; n <= opt.order; ++n) {
            for (int k = 1; k <= n; ++k) {
                Rational sum(0);
                for (int j = k; j <= n; ++j)
                    sum += bell_eval(n, j, utail) * bell_eval(j, k, vtail);
                ++r.checks;
                if (sum != bell_eval(n, k, ptail)) r.note_failure(at(n, k, t));
            }
        }
    }
    return r;
}

CheckReport suite_homogeneity(const VerifyOptions& opt) {
    CheckReport r{.name = "bell-homogeneity"};
    RationalRng rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        std::vector<Rational> g = rng.args(opt.numeric_max_n);
        Rational lambda = rng.small_nonzero();
        for (int n = 1; n <= opt.numeric_max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                ++r.checks;
                if (!bell_homogeneity_check(n, k, lambda, g)) r.note_failure(at(n, k, t));
            }
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "ortho",      "selfinv", "bellrep",    "lemma",       "seqinv",
        "faadibruno", "dual",    "jabotinsky", "homogeneity",
    };
    return names;
}

CheckReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "ortho") return suite_ortho(opt);
    if (name == "selfinv") return suite_selfinv(opt);
    if (name == "bellrep") return suite_bellrep(opt);
    if (name == "lemma") return suite_lemma(opt);
    if (name == "seqinv") return suite_seqinv(opt);
    if (name == "faadibruno") return suite_faadibruno(opt);
    if (name == "dual") return suite_dual(opt);
    if (name == "jabotinsky") return suite_jabotinsky(opt);
    if (name == "homogeneity") return suite_homogeneity(opt);
    throw RangeError("unknown verification suite: " + name);
}

std::vector<CheckReport> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
    std::vector<std::string> expanded;
    if (std::find(names.begin(), names.end(), "all") != names.end()) {
        expanded = suite_names();
    } else {
        expanded = names;
    }
    std::vector<CheckReport> reports;
    reports.reserve(expanded.size());
    for (const auto& name : expanded) reports.push_back(run_suite(name, opt));
    return reports;
}

}  // namespace invoser
