#include "bs/supernatural.hpp"

#include <algorithm>

#include "bs/exact.hpp"

namespace bs {

namespace {

Int factorial(long m) {
    Int f = 1;
    for (long i = 2; i <= m; ++i) f *= i;
    return f;
}

} // namespace

CohomologyTable supernatural_table(const RootSequence& z, const Rational& rank,
                                   long d_lo, long d_hi) {
    check_strictly_decreasing(z);
    if (z.empty()) throw EmptyTable("empty root sequence");
    if (rank <= 0) throw HypothesisViolated("rank must be positive");
    long m = (long)z.size();
    if (d_lo > z.back() - 1 || d_hi < z.front() + 1)
        throw WindowTooNarrow("window must contain [z_m - 1, z_1 + 1] = [" +
                              std::to_string(z.back() - 1) + ", " +
                              std::to_string(z.front() + 1) + "]");
    Rational scale = rank / Rational(factorial(m));
    CohomologyTable t;
    t.m = (int)m;
    t.d_lo = d_lo;
    t.d_hi = d_hi;
    t.complete = true;
    Poly chi = Poly::from_int_roots(z) * scale;
    t.tail_high = chi;
    t.tail_low = (m % 2 == 0) ? chi : -chi;
    for (long d = d_lo; d <= d_hi; ++d) {
        // Row j is the number of roots strictly above d; value 0 at roots.
        if (std::find(z.begin(), z.end(), d) != z.end()) continue;
        int j = 0;
        Rational prod = scale;
        for (long zi : z) {
            if (zi > d) ++j;
            prod *= Rational(std::abs(d - zi));
        }
        t.add(j, d, prod);
    }
    return t;
}

Int rank_gcd_bound(const RootSequence& z) {
    check_strictly_decreasing(z);
    long m = (long)z.size();
    return factorial(m) / integer_value_gcd(Poly::from_int_roots(z));
}

Int literal_rank_bound(const RootSequence& z) {
    check_strictly_decreasing(z);
    long m = (long)z.size();
    Int c = 1;
    for (long p = 2; p <= m; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        std::vector<long> count(p, 0);
        for (long zi : z) ++count[((zi % p) + p) % p];
        long e = *std::min_element(count.begin(), count.end());
        for (long i = 0; i < e; ++i) c *= p;
    }
    return factorial(m) / c;
}

Int multinomial_rank(const RootSequence& z) {
    check_strictly_decreasing(z);
    long m = (long)z.size();
    Int r = factorial(m);
    long run = 1;
    for (size_t i = 1; i <= z.size(); ++i) {
        if (i < z.size() && z[i] == z[i - 1] - 1) {
            ++run;
        } else {
            r /= factorial(run);
            run = 1;
        }
    }
    return r;
}

Int schur_rank(const RootSequence& z) {
    check_strictly_decreasing(z);
    long m = (long)z.size();
    std::vector<long> lambda(m + 1); // 1-based
    for (long i = 1; i <= m; ++i) lambda[i] = z[0] - z[m - i] - m + i;
    Rational dim(1);
    for (long i = 1; i <= m; ++i)
        for (long j = i + 1; j <= m; ++j)
            dim *= Rational(lambda[i] - lambda[j] + j - i) / Rational(j - i);
    if (!is_integer(dim) || dim <= 0)
        throw CrossCheckMismatch("Weyl dimension is not a positive integer");
    return dim.get_num();
}

CohomologyTable monad_table(const RootSequence& z, const Rational& rank, long a,
                            long d_lo, long d_hi) {
    long m = (long)z.size();
    if (a < -z.back() - m)
        throw RegularityViolation("a = " + std::to_string(a) + " violates a >= -z_m - m = " +
                                  std::to_string(-z.back() - m));
    CohomologyTable t = supernatural_table(z, rank, d_lo, d_hi);
    // Row m keeps only twists >= -a - m; everything below is cut, including
    // the low tail.
    long cut = -a - m;
    for (auto it = t.values.begin(); it != t.values.end();) {
        if (it->first.first == (int)m && it->first.second < cut)
            it = t.values.erase(it);
        else
            ++it;
    }
    t.tail_low = Poly();
    if (cut < d_lo)
        throw WindowTooNarrow("monad truncation boundary " + std::to_string(cut) +
                              " lies below the window");
    return t;
}

} // namespace bs
