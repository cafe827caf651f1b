#pragma once

#include "bs/poly.hpp"
#include "bs/rational.hpp"

namespace bs {

// Generalized binomial a(a-1)...(a-k+1)/k!; defined for any integer a,
// so binomial(-2, 3) = -4 and binomial(a, k) = 0 for 0 <= a < k.
Int binomial(const Int& a, unsigned long k);

// binom(d + shift, k) as a degree-k polynomial in d.
Poly binomial_poly(long shift, unsigned long k);

// gcd of { p(d) : d integer } for an integer-valued p != 0, computed from
// the forward differences Delta^k p(0) (the Mahler/binomial-basis
// coefficients), so the result is the global gcd, not a sampled one.
Int integer_value_gcd(const Poly& p);

// Cauchy bound B = 1 + ceil(max_i |a_i / a_lead|): for integers |d| > B,
// sign p(d) = sign(lead) * sign(d)^deg.
long sign_stable_bound(const Poly& p);

// inf over integers d > edge of f(d)/g(d), where g(d) > 0 for all d > edge.
// Exact: samples up to the sign-stable bound of f'g - fg' (beyond which the
// ratio is monotone) plus the limit at infinity. The infimum of the empty
// constraint set (f == 0) is 0.
Rational tail_ratio_inf(const Poly& f, const Poly& g, long edge);

} // namespace bs
