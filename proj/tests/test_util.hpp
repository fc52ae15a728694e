#pragma once

#include <vector>

#include "invoser/laurent.hpp"
#include "invoser/rng.hpp"

namespace testutil {

using invoser::LaurentPoly;
using invoser::Monomial;
using invoser::RationalRng;

// Small random Laurent polynomial: a few terms in X1..X3, X1 exponent may dip
// negative.
inline LaurentPoly random_poly(RationalRng& rng, int max_terms = 3) {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng.next_seed() % static_cast<unsigned>(hi - lo + 1));
    };
    LaurentPoly p;
    int terms = pick(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps = {pick(-2, 2), pick(0, 2), pick(0, 2)};
        p += LaurentPoly::term(rng.small(), Monomial(exps));
    }
    return p;
}

}  // namespace testutil
