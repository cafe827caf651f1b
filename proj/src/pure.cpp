#include "bs/pure.hpp"

#include "bs/exact.hpp"

namespace bs {

BettiTable hk_pure_table(const DegreeSequence& d, int n) {
    check_strictly_increasing(d);
    if (d.empty() || (int)d.size() > n + 1)
        throw IncompatibleShapes("degree sequence length " + std::to_string(d.size()) +
                                 " exceeds n+1 = " + std::to_string(n + 1));
    size_t len = d.size();
    std::vector<Rational> beta(len, Rational(1));
    for (size_t i = 0; i < len; ++i)
        for (size_t j = 0; j < len; ++j)
            if (j != i) beta[i] /= Rational(std::abs(d[j] - d[i]));
    Rational s = primitive_scale_factor(beta);
    BettiTable t;
    t.n = n;
    for (size_t i = 0; i < len; ++i) t.add((int)i, d[i], beta[i] * s);
    return t;
}

Int construction_generators(const DegreeSequence& d) {
    check_strictly_increasing(d);
    if (d.size() < 2)
        throw IncompatibleShapes("construction_generators needs a full-length sequence");
    size_t n = d.size() - 1;
    Int prod = 1;
    for (size_t i = 1; i <= n; ++i)
        prod *= binomial(Int(d[i] - d[0] - 1), (unsigned long)(d[i] - d[i - 1] - 1));
    // Must be a positive integer multiple of the primitive beta_0.
    BettiTable prim = hk_pure_table(d, (int)n);
    Rational b0 = prim.get(0, d[0]);
    Rational ratio = Rational(prod) / b0;
    if (prod <= 0 || !is_integer(ratio) || ratio <= 0)
        throw CrossCheckMismatch("existence-construction beta_0 is not a positive multiple "
                                 "of the primitive generator count");
    return prod;
}

namespace {

Rational moment_sum(const BettiTable& b, int k) {
    Rational acc(0);
    for (const auto& [pos, val] : b.entries) {
        auto [i, j] = pos;
        Rational p(1);
        for (int t = 0; t < k; ++t) p *= Rational(j);
        acc += (i % 2 == 0 ? val : -val) * p;
    }
    return acc;
}

} // namespace

bool hk_moments_check(const BettiTable& b, int c) {
    for (int k = 0; k < c; ++k)
        if (moment_sum(b, k) != 0) return false;
    return true;
}

Rational multiplicity(const BettiTable& b, int c) {
    if (!hk_moments_check(b, c))
        throw MomentsNonzero("table fails the Herzog-Kuhl equations for codimension " +
                             std::to_string(c));
    Rational s = moment_sum(b, c);
    Int cfact = 1;
    for (int i = 2; i <= c; ++i) cfact *= i;
    Rational e = s / Rational(cfact);
    if (c % 2 != 0) e = -e;
    return e;
}

} // namespace bs
