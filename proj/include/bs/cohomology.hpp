#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bs/betti.hpp" // Diagnostics
#include "bs/poly.hpp"
#include "bs/sequences.hpp"

namespace bs {

// gamma(i, d) = h^i(E(d)) stored twist-indexed over an explicit window
// [d_lo, d_hi]. Row 0 continues above the window as the polynomial
// tail_high, row m continues below it as tail_low (both of degree <= m).
// `complete` certifies that rows 1..m-1 vanish outside the window.
// Display convention (CLI only): gamma_{i,d-i} at row i (from the bottom),
// column d.
struct CohomologyTable {
    int m = 0;
    long d_lo = 0, d_hi = 0;
    bool complete = false;
    std::map<std::pair<int, long>, Rational> values; // (row, twist) -> value
    Poly tail_high, tail_low;

    // Value at a window position; zero if not stored. Requires d in window.
    Rational window_value(int i, long d) const;
    // Global value: window positions as stored; row 0 above the window via
    // tail_high and zero below it; row m below the window via tail_low and
    // zero above it; middle rows outside the window are zero when complete,
    // otherwise IncompleteTable is thrown. Rows i < 0 or i > m are zero.
    Rational value(int i, long d) const;
    void add(int i, long d, const Rational& v);
    bool is_zero() const;
    size_t nnz() const { return values.size(); }
    long width() const { return d_hi - d_lo + 1; }
};

Diagnostics validate_cohomology(const CohomologyTable& c);

// r[i] for 1 <= i <= m+1 and R[i] for 0 <= i <= m per the cohomology-range
// definitions; r[0] is unused. r_i is the least display column in which some
// row j < i is nonzero; R_i is 1 + the greatest display column in which some
// row j >= i is nonzero (tails included on rows 0 and m).
struct CohomologyRange {
    std::vector<ExtInt> r; // size m+2
    std::vector<ExtInt> R; // size m+1
};

CohomologyRange cohomology_range(const CohomologyTable& c);

CohomologyTable add_scaled(const CohomologyTable& a, const Rational& coeff,
                           const CohomologyTable& b);

} // namespace bs
