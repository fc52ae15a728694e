#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invoser/report.hpp"

namespace invoser {

// Knobs for the identity suites. Symbolic checks run to sym_max_n; the
// randomized numeric checks run to numeric_max_n at `trials` sample points
// drawn from the seeded generator, and random-series checks use `order`.
struct VerifyOptions {
    int sym_max_n = 8;
    int numeric_max_n = 12;
    int order = 12;
    int trials = 25;
    std::uint64_t seed = 20260101;
};

// Suite names understood by run_suite (plus "all"): ortho, selfinv, bellrep,
// lemma, seqinv, faadibruno, dual, jabotinsky, homogeneity.
const std::vector<std::string>& suite_names();

CheckReport run_suite(const std::string& name, const VerifyOptions& opt);

std::vector<CheckReport> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

}  // namespace invoser
