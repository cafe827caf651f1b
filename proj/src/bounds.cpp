#include "bs/bounds.hpp"

#include <optional>

#include "bs/cohomology.hpp"
#include "bs/exact.hpp"

namespace bs {

std::pair<Rational, Rational> multiplicity_bounds(const BettiTable& b, int c,
                                                  bool normalized) {
    std::vector<std::optional<long>> lo(c + 1), hi(c + 1);
    for (const auto& [pos, val] : b.entries) {
        auto [i, j] = pos;
        if (i < 1 || i > c) continue;
        if (!lo[i] || j < *lo[i]) lo[i] = j;
        if (!hi[i] || j > *hi[i]) hi[i] = j;
    }
    Rational lower(1), upper(1);
    for (int i = 1; i <= c; ++i) {
        if (!lo[i])
            throw EmptyColumn("column " + std::to_string(i) + " has no nonzero entry");
        lower *= Rational(*lo[i]);
        upper *= Rational(*hi[i]);
    }
    Int cfact = 1;
    for (int i = 2; i <= c; ++i) cfact *= i;
    lower /= Rational(cfact);
    upper /= Rational(cfact);
    if (normalized) {
        Rational b0 = b.get(0, 0);
        if (b0 == 0) throw EmptyColumn("beta_{0,0} vanishes; cannot normalize");
        lower /= b0;
        upper /= b0;
    }
    return {lower, upper};
}

Rational strand_bound(int p, int c) {
    if (p < 1) throw HypothesisViolated("strand_bound needs p >= 1");
    return Rational(c + 2 - p) / Rational(2 * p);
}

bool strand_check(const BettiTable& b, int p, int c) {
    if (b.get(p + 1, p + 1) != 0)
        throw HypothesisViolated("beta_{p+1,p+1} must vanish for the strand bound");
    return b.get(p, p) <= strand_bound(p, c) * b.get(p - 1, p - 1);
}

Poly chi_polynomial(const CohomologyTable& c) {
    if (!c.complete)
        throw IncompleteTable("chi_polynomial requires a complete table");
    if (c.width() < (long)c.m + 2)
        throw WindowTooNarrow("window width " + std::to_string(c.width()) +
                              " < m + 2 = " + std::to_string(c.m + 2));
    auto chi_at = [&c](long d) {
        Rational acc(0);
        for (int i = 0; i <= c.m; ++i) {
            Rational v = c.window_value(i, d);
            acc += (i % 2 == 0) ? v : -v;
        }
        return acc;
    };
    std::vector<std::pair<Rational, Rational>> pts;
    for (long d = c.d_lo; d <= c.d_lo + c.m; ++d)
        pts.emplace_back(Rational(d), chi_at(d));
    Poly chi = Poly::interpolate(pts);
    for (long d = c.d_lo + c.m + 1; d <= c.d_hi; ++d)
        if (chi(Rational(d)) != chi_at(d))
            throw InconsistentTable("chi fails to match the window at twist " +
                                    std::to_string(d));
    if (chi != c.tail_high)
        throw InconsistentTable("chi disagrees with tail_high");
    Poly signed_low = (c.m % 2 == 0) ? c.tail_low : -c.tail_low;
    if (chi != signed_low)
        throw InconsistentTable("chi disagrees with (-1)^m tail_low");
    return chi;
}

SlopeBounds slope_bounds(const CohomologyTable& c) {
    Poly chi = chi_polynomial(c);
    long m = c.m;
    if (chi.degree() != m)
        throw InconsistentTable("chi has degree " + std::to_string(chi.degree()) +
                                ", expected m = " + std::to_string(m));
    Int mfact = 1, m1fact = 1;
    for (long i = 2; i <= m; ++i) {
        mfact *= i;
        if (i <= m - 1) m1fact *= i;
    }
    Rational rank = chi.coeff((int)m) * Rational(mfact);
    if (rank <= 0) throw InconsistentTable("chi has nonpositive leading rank");
    Rational deg = (chi.coeff((int)m - 1) -
                    rank * Rational(m + 1) / (Rational(2) * Rational(m1fact))) *
                   Rational(m1fact);
    CohomologyRange range = cohomology_range(c);
    Rational sum_r(0), sum_R(0);
    for (int i = 1; i <= c.m; ++i) {
        if (!range.r[i].is_finite() || !range.R[i].is_finite())
            throw InconsistentTable("r_" + std::to_string(i) + " or R_" + std::to_string(i) +
                                    " is infinite; no slope bounds");
        sum_r += Rational(range.r[i].finite());
        sum_R += Rational(range.R[i].finite());
    }
    SlopeBounds out;
    out.mu = deg / rank;
    out.lower = -sum_R / Rational(m);
    out.upper = -sum_r / Rational(m);
    return out;
}

} // namespace bs
