#pragma once

#include <map>
#include <utility>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/sequences.hpp"

namespace bs {

// A linear form on tables, materialized over an explicit window.
// Betti side: coeffs[(i, k)] multiplies beta_{i,k}; the window bounds the
//   display rows l = k - i, and evaluation of a table with support outside
//   the window is an error (no silent truncation).
// Cohomology side: coeffs[(j, d)] multiplies gamma(j, d); the form is
//   finitely supported, so evaluation is exact for any table.
struct Functional {
    enum class Side { Betti, Cohomology };
    Side side = Side::Betti;
    int size = 0; // n (betti side) or m (cohomology side)
    long win_lo = 0, win_hi = 0; // display rows (betti) / twists (cohomology)
    std::map<std::pair<int, long>, Rational> coeffs;

    Rational coeff(int a, long b) const;
    void add(int a, long b, const Rational& v);
    // Rescale to a primitive integer table (positive factor).
    void make_primitive();
};

Rational evaluate(const Functional& fn, const BettiTable& b);
Rational evaluate(const Functional& fn, const CohomologyTable& c);

// <beta, gamma> = sum_{j <= i} (-1)^{i-j} beta_{i,k} gamma(j, -k).
Rational pair(const BettiTable& b, const CohomologyTable& c);

// Modified pairing <beta, gamma>_{cutoff, tau}: the terms with j < tau or
// j <= i-2 as in the unmodified form, plus the terms j = tau, i = tau+eps
// (eps in {0,1}) restricted to k <= cutoff + eps.
Rational pair_modified(const BettiTable& b, const CohomologyTable& c, long cutoff, int tau);

// Betti-side coefficient table of <-, gamma>_{cutoff,tau} over columns 0..n
// and display rows [row_lo, row_hi] (regions U/V/V'/W).
Functional betti_functional(const CohomologyTable& c, long cutoff, int tau, int n,
                            long row_lo, long row_hi);
// Same for the unmodified <-, gamma>.
Functional betti_functional_unmodified(const CohomologyTable& c, int n,
                                       long row_lo, long row_hi);

// Cohomology-side coefficient table of <F, ->_{cutoff,tau} for the pure
// resolution F with full-length degree sequence f: the coefficient of
// gamma(j, -f_i) is (-1)^{i-j} beta_{i,f_i} over the admitted index pairs.
Functional cohomology_functional(const DegreeSequence& f, long cutoff, int tau);
Functional cohomology_functional_unmodified(const DegreeSequence& f);

} // namespace bs
