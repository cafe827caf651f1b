#pragma once

#include "bs/betti.hpp"
#include "bs/sequences.hpp"

namespace bs {

// The pure table supported at (i, d_i) with beta_i proportional to
// prod_{j != i} 1/|d_j - d_i| (Herzog-Kuhl), scaled to positive integers
// with gcd 1.
BettiTable hk_pure_table(const DegreeSequence& d, int n);

// beta_0 = prod_{i=1}^n binom(d_i - d_0 - 1, d_i - d_{i-1} - 1) for a
// full-length degree sequence; always a positive integer multiple of the
// primitive table's beta_0 (asserted).
Int construction_generators(const DegreeSequence& d);

// True iff sum_{i,j} (-1)^i beta_{i,j} j^k = 0 for 0 <= k < c.
bool hk_moments_check(const BettiTable& b, int c);

// e = (-1)^c / c! * sum_{i,j} (-1)^i beta_{i,j} j^c.
// Throws MomentsNonzero unless hk_moments_check(b, c) holds.
Rational multiplicity(const BettiTable& b, int c);

} // namespace bs
