#include "bs/exact.hpp"

#include <algorithm>

#include "bs/errors.hpp"

namespace bs {

Int binomial(const Int& a, unsigned long k) {
    // Falling-factorial definition, valid for negative a.
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) num *= a - (long)i;
    Int den = 1;
    for (unsigned long i = 2; i <= k; ++i) den *= (long)i;
    return num / den; // exact: k! divides any product of k consecutive integers
}

Poly binomial_poly(long shift, unsigned long k) {
    Poly p = Poly::constant(Rational(1));
    for (unsigned long i = 0; i < k; ++i)
        p = p * Poly{Rational(shift - (long)i), Rational(1)};
    Int fact = 1;
    for (unsigned long i = 2; i <= k; ++i) fact *= (long)i;
    return p * Rational(Int(1), fact);
}

Int integer_value_gcd(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("integer_value_gcd of the zero polynomial");
    int deg = p.degree();
    std::vector<Rational> diffs(deg + 1);
    for (int i = 0; i <= deg; ++i) diffs[i] = p.at(i);
    // In-place forward differences: after the loop diffs[k] = Delta^k p(0).
    for (int level = 1; level <= deg; ++level)
        for (int i = deg; i >= level; --i) diffs[i] = diffs[i] - diffs[i - 1];
    Int g = 0;
    for (const auto& v : diffs) {
        if (!is_integer(v))
            throw HypothesisViolated("polynomial is not integer-valued: " + p.to_string());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    return abs(g);
}

long sign_stable_bound(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("sign_stable_bound of the zero polynomial");
    const Rational lead = p.lead();
    Int best = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational t = abs(p.coeff(i) / lead);
        Int ceilv;
        mpz_cdiv_q(ceilv.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
        best = std::max(best, ceilv);
    }
    Int b = best + 1;
    if (!b.fits_slong_p())
        throw HypothesisViolated("sign-stable bound too large: " + p.to_string());
    return b.get_si();
}

Rational tail_ratio_inf(const Poly& f, const Poly& g, long edge) {
    if (g.is_zero()) throw ZeroPolynomial("tail_ratio_inf with zero denominator tail");
    if (f.is_zero()) return Rational(0);

    Poly cross = f.derivative() * g - f * g.derivative();
    long hi;
    if (cross.is_zero()) {
        hi = edge + 1; // f/g constant beyond common roots; one sample suffices
    } else {
        hi = std::max(edge + 1, std::max(sign_stable_bound(cross), sign_stable_bound(g)) + 1);
    }

    bool have = false;
    Rational best(0);
    for (long d = edge + 1; d <= hi; ++d) {
        Rational gd = g.at(d);
        if (gd <= 0)
            throw HypothesisViolated("denominator tail not positive beyond edge");
        Rational ratio = f.at(d) / gd;
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    // Limit at +infinity: beyond hi the ratio is monotone, so the infimum is
    // min(sampled values, limit).
    if (f.degree() < g.degree()) {
        Rational limit(0);
        if (limit < best) best = limit;
    } else if (f.degree() == g.degree()) {
        Rational limit = f.lead() / g.lead();
        if (limit < best) best = limit;
    }
    return best;
}

} // namespace bs
