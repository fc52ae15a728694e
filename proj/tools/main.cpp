// invoser: exact tables of Bell / Stirling-first / Lah polynomials, identity
// verification suites, involution generation and decomposition, and series
// expansion of closed-form expressions.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "invoser/bell.hpp"
#include "invoser/errors.hpp"
#include "invoser/expr.hpp"
#include "invoser/involution.hpp"
#include "invoser/json_io.hpp"
#include "invoser/series.hpp"
#include "invoser/stirling_lah.hpp"
#include "invoser/verify.hpp"

using nlohmann::json;
using namespace invoser;

namespace {

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buf;

    int flush() {
        if (path.empty()) {
            std::cout << buf.str();
            return 0;
        }
        std::ofstream os(path);
        if (!os) {
            std::cerr << "error: cannot write " << path << "\n";
            return 2;
        }
        os << buf.str();
        return 0;
    }
};

std::vector<Rational> parse_seed_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(Rational::from_string(item));
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw JsonFormatError("cannot read " + path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw JsonFormatError(path + ": " + e.what());
    }
    return j;
}

Series load_series_file(const std::string& path) { return series_from_json(load_json_file(path)); }

int emit_table(const std::string& family, int max_n, const std::string& format, Output& out) {
    auto poly_at = [&](int n, int k) -> const LaurentPoly& {
        if (family == "B") return bell_poly(n, k);
        if (family == "A") return stirling_first_poly(n, k);
        return lah_poly(n, k);
    };
    if (format == "json") {
        json entries = json::array();
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k)
                entries.push_back({{"n", n}, {"k", k}, {"poly", poly_to_json(poly_at(n, k))}});
        out.buf << json{{"family", family}, {"max_n", max_n}, {"entries", entries}}.dump(2)
                << "\n";
    } else {
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k)
                out.buf << family << "[" << n << "," << k << "] = " << poly_at(n, k).str()
                        << "\n";
    }
    return out.flush();
}

// ---------------------------------------------------------------------------
// Golden reproduction: recompute the reference values and diff them against
// the committed fixtures.

struct GoldenItem {
    std::string name;
    std::string group;
    // Returns (expected, actual); expected comes from the fixture directory.
    std::function<std::pair<json, json>(const std::string& fixtures)> run;
};

void naive_unified_diff(const std::string& expected, const std::string& actual,
                        std::ostream& os) {
    std::vector<std::string> e, a;
    std::stringstream se(expected), sa(actual);
    std::string line;
    while (std::getline(se, line)) e.push_back(line);
    while (std::getline(sa, line)) a.push_back(line);
    os << "--- expected (fixture)\n+++ actual (computed)\n";
    std::size_t m = std::max(e.size(), a.size());
    for (std::size_t i = 0; i < m; ++i) {
        const std::string* le = i < e.size() ? &e[i] : nullptr;
        const std::string* la = i < a.size() ? &a[i] : nullptr;
        if (le && la && *le == *la) continue;
        if (le) os << "- " << *le << "\n";
        if (la) os << "+ " << *la << "\n";
    }
}

std::vector<Rational> geometric_args(const Rational& c, int count) {
    std::vector<Rational> v;
    Rational p(1);
    for (int j = 1; j <= count; ++j) {
        p *= c;
        v.push_back(p);
    }
    return v;
}

json lah_values_at(const std::vector<Rational>& args, int max_n) {
    json out = json::array();
    for (int n = 1; n <= max_n; ++n)
        out.push_back(lah_eval(n, 1, std::span<const Rational>(args.data(),
                                                               static_cast<std::size_t>(n)))
                          .str());
    return out;
}

std::vector<GoldenItem> golden_items() {
    std::vector<GoldenItem> items;

    // Odd coefficients of the generic involution as polynomials in the free
    // even-index seeds a_k (encoded as X_k).
    for (int n : {1, 3, 5, 7, 9}) {
        items.push_back(GoldenItem{
            "f" + std::to_string(n), "involution-coefficients",
            [n](const std::string& fixtures) {
                json fix = load_json_file(fixtures + "/involution_odd_coefficients.json");
                PolySeries f = involution_from_even_seeds_symbolic(4, 9);
                json actual = poly_to_json(f.coeff(n));
                return std::pair<json, json>(fix.at("f" + std::to_string(n)), actual);
            }});
    }

    for (int n = 1; n <= 6; ++n) {
        items.push_back(GoldenItem{
            "lah" + std::to_string(n), "lah-row",
            [n](const std::string& fixtures) {
                json fix = load_json_file(fixtures + "/lah_row_k1.json");
                return std::pair<json, json>(fix.at("L" + std::to_string(n)),
                                             poly_to_json(lah_poly(n, 1)));
            }});
    }

    items.push_back(GoldenItem{
        "exp-sin", "series",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/exp_sin_sequence.json");
            return std::pair<json, json>(fix,
                                         series_to_json(eval_series("exp(sin(x))-1", 10)));
        }});

    items.push_back(GoldenItem{
        "neg-x", "series",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/neg_x_over_one_plus_x.json");
            return std::pair<json, json>(fix, series_to_json(eval_series("-x/(1+x)", 10)));
        }});

    items.push_back(GoldenItem{
        "lah-ones", "lah-identities",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/lah_identity_values.json");
            std::vector<Rational> ones(10, Rational(1));
            return std::pair<json, json>(fix.at("neg_factorials"), lah_values_at(ones, 10));
        }});

    items.push_back(GoldenItem{
        "lah-geometric", "lah-identities",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/lah_identity_values.json");
            json actual = json::object();
            for (const Rational& c : {Rational(2), Rational(3), Rational(-1, 2)})
                actual[c.str()] = lah_values_at(geometric_args(c, 10), 10);
            json expected = json::object();
            for (const std::string key : {"2", "3", "-1/2"})
                expected[key] = fix.at("neg_factorials");
            return std::pair<json, json>(expected, actual);
        }});

    items.push_back(GoldenItem{
        "lah-expsin", "lah-identities",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/lah_identity_values.json");
            Series g = eval_series("exp(sin(x))-1", 10);
            std::vector<Rational> args(g.coeffs().begin() + 1, g.coeffs().end());
            return std::pair<json, json>(fix.at("neg_factorials"), lah_values_at(args, 10));
        }});

    items.push_back(GoldenItem{
        "signed-lah", "lah-identities",
        [](const std::string& fixtures) {
            json fix = load_json_file(fixtures + "/lah_identity_values.json");
            json actual = json::array();
            for (int n = 1; n <= 8; ++n) {
                json row = json::array();
                std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
                for (int k = 1; k <= n; ++k) row.push_back(lah_eval(n, k, ones).str());
                actual.push_back(row);
            }
            return std::pair<json, json>(fix.at("signed_lah_triangle"), actual);
        }});

    return items;
}

int cmd_reproduce(const std::string& item, const std::string& fixtures,
                  const std::string& format, Output& out) {
    int failures = 0;
    json report = json::array();
    bool matched_any = false;
    for (const GoldenItem& g : golden_items()) {
        if (item != "all" && item != g.name && item != g.group) continue;
        matched_any = true;
        std::string status = "ok";
        std::string diff;
        try {
            auto [expected, actual] = g.run(fixtures);
            if (expected != actual) {
                status = "MISMATCH";
                ++failures;
                std::ostringstream d;
                naive_unified_diff(expected.dump(1), actual.dump(1), d);
                diff = d.str();
            }
        } catch (const std::exception& e) {
            status = std::string("ERROR: ") + e.what();
            ++failures;
        }
        if (format == "json") {
            report.push_back({{"item", g.name}, {"group", g.group}, {"status", status}});
        } else {
            out.buf << g.name << " (" << g.group << "): " << status << "\n";
            if (!diff.empty()) out.buf << diff;
        }
    }
    if (!matched_any) {
        std::cerr << "error: no golden item named '" << item << "'\n";
        return 2;
    }
    if (format == "json")
        out.buf << json{{"items", report}, {"passed", failures == 0}}.dump(2) << "\n";
    else
        out.buf << (failures == 0 ? "reproduce: PASS" : "reproduce: FAIL") << "\n";
    int rc = out.flush();
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bell/Stirling/Lah polynomial tables and involutory power series"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    int max_n = 8;
    int trials = 25;
    std::uint64_t rng_seed = 20260101;

    // Global flags, also accepted after any subcommand (fallthrough). The
    // selected action runs only after the whole command line is parsed so
    // flag position does not matter.
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");
    app.add_option("--max-n", max_n, "Largest row n / symbolic check depth")
        ->check(CLI::PositiveNumber);
    app.add_option("--trials", trials, "Random sample points per numeric check");
    app.add_option("--rng-seed", rng_seed, "Seed for the randomized checks");

    std::function<int()> action;

    auto add_table = [&](const std::string& cmd, const std::string& family,
                         const std::string& what) {
        CLI::App* sub = app.add_subcommand(cmd, what)->fallthrough();
        sub->parse_complete_callback([&, family]() {
            action = [&, family]() {
                Output out{out_path, {}};
                return emit_table(family, max_n, format, out);
            };
        });
    };
    add_table("bell-table", "B", "Print the partial Bell polynomial triangle");
    add_table("stirling-table", "A", "Print the Stirling-first polynomial triangle");
    add_table("lah-table", "L", "Print the Lah polynomial triangle");

    // verify ---------------------------------------------------------------
    CLI::App* verify = app.add_subcommand("verify", "Run the polynomial identity suites");
    verify->fallthrough();
    std::vector<std::string> suites{"all"};
    bool inject_fault = false;
    verify->add_option("--suite", suites,
                       "Suites to run (ortho|selfinv|bellrep|lemma|seqinv|faadibruno|dual|"
                       "jabotinsky|homogeneity|all)")
        ->delimiter(',');
    verify->add_flag("--inject-fault", inject_fault, "Force one failure (self-test of the harness)")
        ->group("");  // hidden
    verify->parse_complete_callback([&]() {
        action = [&]() {
            VerifyOptions opt;
            opt.sym_max_n = max_n;
            opt.trials = trials;
            opt.seed = rng_seed;
            std::vector<CheckReport> reports = run_suites(suites, opt);
            if (inject_fault && !reports.empty())
                reports.front().note_failure("injected fault (self-test)");
            bool all_pass = true;
            Output out{out_path, {}};
            json jreports = json::array();
            for (const CheckReport& r : reports) {
                all_pass = all_pass && r.passed();
                if (format == "json") {
                    jreports.push_back(
                        {{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}});
                } else {
                    out.buf << r.summary() << "\n";
                    for (const auto& f : r.failures) out.buf << "  " << f << "\n";
                }
            }
            if (format == "json")
                out.buf << json{{"suites", jreports}, {"passed", all_pass}}.dump(2) << "\n";
            else
                out.buf << (all_pass ? "verify: PASS" : "verify: FAIL") << "\n";
            int rc = out.flush();
            return rc != 0 ? rc : (all_pass ? 0 : 1);
        };
    });

    // involution -----------------------------------------------------------
    CLI::App* invo = app.add_subcommand("involution", "Generate, check and decompose involutions");
    invo->require_subcommand(1);
    invo->fallthrough();
    std::string even_seeds, odd_seeds, series_file, g_file;
    int order = 8;

    CLI::App* gen = invo->add_subcommand("gen", "Build an involution from free even seeds");
    gen->fallthrough();
    gen->add_option("--even-seeds", even_seeds, "Comma list a1,a2,... of f_2,f_4,...")
        ->required();
    gen->add_option("--order", order, "Truncation order")->check(CLI::PositiveNumber);
    gen->parse_complete_callback([&]() {
        action = [&]() {
            Series f =
                involution_from_even_seeds(SeedSpec::even(parse_seed_list(even_seeds)), order);
            Output out{out_path, {}};
            out.buf << series_to_json(f).dump(2) << "\n";
            return out.flush();
        };
    });

    CLI::App* check = invo->add_subcommand("check", "Check a series file for involutivity");
    check->fallthrough();
    check->add_option("--series-file", series_file, "Series JSON file")->required();
    check->parse_complete_callback([&]() {
        action = [&]() {
            CheckReport r = involution_check_report(load_series_file(series_file));
            Output out{out_path, {}};
            if (format == "json") {
                out.buf << json{{"name", r.name},
                                {"checks", r.checks},
                                {"failures", r.failures},
                                {"passed", r.passed()}}
                               .dump(2)
                        << "\n";
            } else {
                out.buf << r.summary() << "\n";
                for (const auto& f : r.failures) out.buf << "  " << f << "\n";
            }
            int rc = out.flush();
            return rc != 0 ? rc : (r.passed() ? 0 : 1);
        };
    });

    CLI::App* conj = invo->add_subcommand("conjugate", "Conjugate -id by the series in --g-file");
    conj->fallthrough();
    conj->add_option("--g-file", g_file, "Invertible series JSON file")->required();
    conj->add_option("--order", order, "Truncate the input to this order first")
        ->check(CLI::PositiveNumber);
    conj->parse_complete_callback([&]() {
        action = [&]() {
            Series g = load_series_file(g_file);
            if (conj->count("--order") > 0) g = series_truncate(g, order);
            Output out{out_path, {}};
            out.buf << series_to_json(involution_from_conjugator(g)).dump(2) << "\n";
            return out.flush();
        };
    });

    CLI::App* dec = invo->add_subcommand("decompose",
                                         "Extract a conjugator g with f = g o (-id) o g^-1");
    dec->fallthrough();
    dec->add_option("--series-file", series_file, "Involutory series JSON file")->required();
    dec->add_option("--odd-seeds", odd_seeds, "Comma list g1,g3,g5,... (g1 != 0)")->required();
    dec->add_option("--order", order, "Truncate the input to this order first")
        ->check(CLI::PositiveNumber);
    dec->parse_complete_callback([&]() {
        action = [&]() {
            Series f = load_series_file(series_file);
            if (dec->count("--order") > 0) f = series_truncate(f, order);
            Series g = conjugator_from_involution(f, SeedSpec::odd(parse_seed_list(odd_seeds)));
            Output out{out_path, {}};
            out.buf << series_to_json(g).dump(2) << "\n";
            return out.flush();
        };
    });

    // series ---------------------------------------------------------------
    CLI::App* series_cmd = app.add_subcommand("series", "Series utilities");
    series_cmd->require_subcommand(1);
    series_cmd->fallthrough();
    CLI::App* eval = series_cmd->add_subcommand("eval", "Expand a closed-form expression");
    eval->fallthrough();
    std::string expr_text, convention = "exponential";
    eval->add_option("--expr", expr_text, "Expression, e.g. \"exp(sin(x))-1\"")->required();
    eval->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
    eval->add_option("--convention", convention, "Coefficient convention for display")
        ->check(CLI::IsMember({"exponential", "ordinary"}));
    eval->parse_complete_callback([&]() {
        action = [&]() {
            Series f = eval_series(expr_text, order);
            Output out{out_path, {}};
            if (format == "json") {
                out.buf << (convention == "ordinary" ? series_to_json_ordinary(f)
                                                     : series_to_json(f))
                               .dump(2)
                        << "\n";
            } else {
                const std::vector<Rational> ordinary = to_ordinary(f);
                for (int n = 0; n <= f.order(); ++n)
                    out.buf << n << ": "
                            << (convention == "ordinary" ? ordinary[static_cast<std::size_t>(n)]
                                                         : f.coeff(n))
                                   .str()
                            << "\n";
            }
            return out.flush();
        };
    });

    // reproduce-paper --------------------------------------------------------
    CLI::App* rep = app.add_subcommand(
        "reproduce-paper", "Recompute the reference values and diff against the fixtures");
    rep->fallthrough();
    std::string item = "all", fixtures = "fixtures";
    rep->add_option("--item", item, "Single item or group to reproduce (default: all)");
    rep->add_option("--fixtures", fixtures, "Fixture directory");
    rep->parse_complete_callback([&]() {
        action = [&]() {
            Output out{out_path, {}};
            return cmd_reproduce(item, fixtures, format, out);
        };
    });

    try {
        app.parse(argc, argv);
        if (action) return action();
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
