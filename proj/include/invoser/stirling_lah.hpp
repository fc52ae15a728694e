#pragma once

#include <span>

#include "invoser/bell.hpp"
#include "invoser/laurent.hpp"
#include "invoser/rational.hpp"
#include "invoser/report.hpp"

namespace invoser {

// Stirling polynomials of the first kind A_{n,k}: the ortho-inverse companions
// of the Bell triangle, Laurent in X1. Built by the descending-k triangular
// solve of sum_{j=k}^{n} A_{n,j} B_{j,k} = delta_{n,k}; memoized.
const LaurentPoly& stirling_first_poly(int n, int k);

// Independent construction: A_{j,1} read off the symbolic compositional
// inverse of the generic series, then A_{n,k} = B_{n,k}(A_{1,1}, ...).
// Used as a cross-check against stirling_first_poly.
LaurentPoly stirling_first_via_inverse(int n, int k);

// Lah polynomials L_{n,k} = sum_{j=k}^{n} (-1)^j A_{n,j} B_{j,k}; memoized.
const LaurentPoly& lah_poly(int n, int k);

// Exact evaluation of L_{n,k} at X_j = args[j-1]; args[0] must be nonzero.
Rational lah_eval(int n, int k, std::span<const Rational> args);

// Symbolic identity checks over 1 <= k <= n <= max_n. Each returns a report
// whose failure list must come back empty.
CheckReport check_ortho_inversion(int max_n);          // sum A_{n,j} B_{j,k} = delta_{n,k}
CheckReport check_lah_selfinverse(int max_n);          // sum L_{n,j} L_{j,k} = delta_{n,k}
CheckReport check_lah_bell_representability(int max_n);  // L_{n,k} = B_{n,k}(L_{1,1}, ...)
CheckReport check_lah_lemma(int max_n);                // the (1+(-1)^{n+1}) L_{n,1} identity
CheckReport check_inversion_of_sequences(int max_n);   // sum L_{k,1} B_{n,k} = (-1)^n X_n

// For odd n the subfamily member L_{n,1} must not mention X_n.
bool lah_parity_support_check(int n);

}  // namespace invoser
