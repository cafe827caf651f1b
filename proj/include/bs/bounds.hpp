#pragma once

#include <utility>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/poly.hpp"

namespace bs {

// (1/c! prod_{i=1..c} min{j : beta_{i,j} != 0}, 1/c! prod max{...}).
// normalized divides both products by beta_{0,0}. Throws EmptyColumn.
std::pair<Rational, Rational> multiplicity_bounds(const BettiTable& b, int c,
                                                  bool normalized = false);

// (c + 2 - p) / (2p).
Rational strand_bound(int p, int c);

// Requires beta_{p+1,p+1}(b) = 0 (else HypothesisViolated); true iff
// beta_{p,p} <= strand_bound(p, c) * beta_{p-1,p-1}.
bool strand_check(const BettiTable& b, int p, int c);

// chi(E(d)) = sum_i (-1)^i value(i, d): the unique degree <= m interpolant
// over the window, verified at every window point and against both tails.
// Throws InconsistentTable, WindowTooNarrow (window width < m + 2).
Poly chi_polynomial(const CohomologyTable& c);

struct SlopeBounds {
    Rational lower, mu, upper;
};

// lower = -(1/m) sum R_i, upper = -(1/m) sum r_i (i = 1..m); mu = deg/rank
// extracted from the two leading coefficients of chi_polynomial.
SlopeBounds slope_bounds(const CohomologyTable& c);

} // namespace bs
