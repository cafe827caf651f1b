#pragma once

#include <utility>

#include "bs/pairing.hpp"
#include "bs/sequences.hpp"

namespace bs {

// Requires f_{tau+1} = f_tau + 2 (else GapNotTwo). Returns
// f^- (f with f_{tau+1} - 1) and f^+ (f with f_tau + 1).
std::pair<DegreeSequence, DegreeSequence> facet_neighbors(const DegreeSequence& f, int tau);

// Tie-breaking rule for the maximal chain used by the inductive solve; any
// maximal chain yields the same functional (tested), Canonical is the
// deterministic default.
enum class ChainRule { Canonical, Alternative };

// Upper facet equation of facet(f, tau) over display rows [row_lo, row_hi]:
// zeros at (i, j >= f^+_i), seeds beta_{tau+1}(f^-) at (tau, f^-_tau) and
// -beta_tau(f^-) at (tau+1, f^-_{tau+1}), remaining cells solved one
// orthogonality equation per chain step below f^-; primitive integer scale.
Functional upper_facet_equation(const DegreeSequence& f, int tau, long row_lo,
                                long row_hi, ChainRule rule = ChainRule::Canonical);

// Mirror image: zeros at (i, j <= f^-_i), seeds at f^+, chain ascends.
Functional lower_facet_equation(const DegreeSequence& f, int tau, long row_lo,
                                long row_hi, ChainRule rule = ChainRule::Canonical);

// The same functional built from the supernatural monad of the §8 recipe:
// z = (-f_0, ..., -f_{tau-1}, -f_{tau+2}, ..., -f_n), rank = rank_gcd_bound,
// a = f_n - n + 1, cutoff = f_tau. Asserted equal to upper_facet_equation
// (CrossCheckMismatch otherwise).
Functional facet_from_supernatural(const DegreeSequence& f, int tau, long row_lo,
                                   long row_hi);

// Cohomology-side facet for z^+ > z > z^- differing only at index i (1-based)
// by +-1: f = sorted negated union, cutoff = f_tau - 1 with f_tau = -z_i.
// Throws NotAFacet when z_i +- 1 collides with a neighbor.
Functional cohomology_facet(const RootSequence& z, int i);

// Corollary "diagonals": every coefficient pair with j < f_i inside the
// window satisfies b_{i+1,j} = -b_{i,j}.
bool diagonal_check(const Functional& fn, const DegreeSequence& f);

} // namespace bs
