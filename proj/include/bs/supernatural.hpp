#pragma once

#include "bs/cohomology.hpp"
#include "bs/sequences.hpp"

namespace bs {

// Supernatural table: value(j, d) = (rank/m!) prod_i |d - z_i| when
// z_j > d > z_{j+1} (z_0 = +inf, z_{m+1} = -inf), else 0; tails are
// +-(rank/m!) prod (d - z_i). Requires window >= [z_m - 1, z_1 + 1].
CohomologyTable supernatural_table(const RootSequence& z, const Rational& rank,
                                   long d_lo, long d_hi);

// m!/c(z) with c(z) the true gcd of values of prod(t - z_j); every
// supernatural rank with roots z is a multiple of this.
Int rank_gcd_bound(const RootSequence& z);

// m!/c_lit(z) with c_lit = prod_p p^{e_p(z)}, e_p = the maximal e such that
// every residue class mod p contains at least e of the z_j. Exposed for
// comparison only; can exceed rank_gcd_bound (e.g. (4,3,0,-6,-7,-9)).
Int literal_rank_bound(const RootSequence& z);

// m!/(m_1! ... m_k!) over the maximal runs of consecutive integers in z.
Int multinomial_rank(const RootSequence& z);

// Weyl dimension of S_lambda(Q) with lambda_i = z_1 - z_{m+1-i} - m + i.
Int schur_rank(const RootSequence& z);

// Cohomology table of the linear monad built from the supernatural bundle:
// rows < m unchanged; row m truncated to twists >= -a - m with a zero low
// tail. Requires a >= -z_m - m (else RegularityViolation).
CohomologyTable monad_table(const RootSequence& z, const Rational& rank, long a,
                            long d_lo, long d_hi);

} // namespace bs
