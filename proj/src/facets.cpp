#include "bs/facets.hpp"

#include <algorithm>

#include "bs/pure.hpp"
#include "bs/supernatural.hpp"

namespace bs {

std::pair<DegreeSequence, DegreeSequence> facet_neighbors(const DegreeSequence& f, int tau) {
    check_strictly_increasing(f);
    if (tau < 0 || tau + 1 >= (int)f.size())
        throw IncompatibleShapes("tau = " + std::to_string(tau) + " out of range for a sequence "
                                 "of length " + std::to_string(f.size()));
    if (f[(size_t)tau + 1] != f[(size_t)tau] + 2)
        throw GapNotTwo("f_{tau+1} - f_tau = " +
                        std::to_string(f[(size_t)tau + 1] - f[(size_t)tau]) + ", expected 2");
    DegreeSequence fm = f, fp = f;
    fm[(size_t)tau + 1] -= 1;
    fp[(size_t)tau] += 1;
    return {fm, fp};
}

namespace {

using Cell = std::pair<int, long>;

struct ChainSolver {
    int n;
    bool upper; // zeros above (j >= bound_i) vs below (j <= bound_i)
    const DegreeSequence& bound; // f^+ (upper) or f^- (lower)
    std::map<Cell, Rational> det;

    Rational known(int i, long j) const {
        if (upper ? j >= bound[(size_t)i] : j <= bound[(size_t)i]) return Rational(0);
        auto it = det.find({i, j});
        if (it == det.end())
            throw CrossCheckMismatch("chain solve consulted an undetermined cell (" +
                                     std::to_string(i) + ", " + std::to_string(j) + ")");
        return it->second;
    }

    // One orthogonality equation against the pure table of g; the single new
    // unknown is the coefficient at (p, g_p).
    void solve(const DegreeSequence& g, int p) {
        BettiTable beta = hk_pure_table(g, n);
        Rational rest(0);
        for (int i = 0; i <= n; ++i)
            if (i != p) rest += known(i, g[(size_t)i]) * beta.get(i, g[(size_t)i]);
        det[{p, g[(size_t)p]}] = -rest / beta.get(p, g[(size_t)p]);
    }
};

Functional facet_equation(const DegreeSequence& f, int tau, long row_lo, long row_hi,
                          ChainRule rule, bool upper) {
    auto [fm, fp] = facet_neighbors(f, tau);
    int n = (int)f.size() - 1;
    if (row_lo > row_hi) throw WindowTooNarrow("empty display-row window");

    // Top (upper) / bottom (lower) display row of the nonzero support.
    long support_edge = f[(size_t)tau] + (upper ? -tau : 1 - tau);
    for (int i = 0; i <= n; ++i) {
        if (i == tau || i == tau + 1) continue;
        long r = f[(size_t)i] - i + (upper ? -1 : 1);
        support_edge = upper ? std::max(support_edge, r) : std::min(support_edge, r);
    }
    if (upper ? row_hi < support_edge : row_lo > support_edge)
        throw WindowTooNarrow("window misses the support edge at display row " +
                              std::to_string(support_edge));

    ChainSolver solver{n, upper, upper ? fp : fm, {}};
    const DegreeSequence& start = upper ? fm : fp;
    BettiTable seed_beta = hk_pure_table(start, n);
    Rational s_tau = seed_beta.get(tau + 1, start[(size_t)tau + 1]);
    Rational s_tau1 = seed_beta.get(tau, start[(size_t)tau]);
    solver.det[{tau, start[(size_t)tau]}] = upper ? s_tau : -s_tau;
    solver.det[{tau + 1, start[(size_t)tau + 1]}] = upper ? -s_tau1 : s_tau1;

    long k = 0;
    for (int i = 0; i <= n; ++i) {
        long need = upper ? start[(size_t)i] - (i + row_lo) : (i + row_hi) - start[(size_t)i];
        k = std::max(k, need);
    }
    DegreeSequence target = start;
    for (auto& t : target) t += upper ? -k : k;

    DegreeSequence g = start;
    while (g != target) {
        int pick = -1;
        for (int p = 0; p <= n; ++p) {
            bool ok;
            if (upper) {
                ok = g[(size_t)p] - 1 >= target[(size_t)p] &&
                     (p == 0 || g[(size_t)p] - 1 > g[(size_t)p - 1]);
            } else {
                ok = g[(size_t)p] + 1 <= target[(size_t)p] &&
                     (p == n || g[(size_t)p] + 1 < g[(size_t)p + 1]);
            }
            if (!ok) continue;
            bool preferred = (rule == ChainRule::Canonical) == upper;
            if (pick < 0 || (preferred ? p > pick : p < pick)) pick = p;
        }
        if (pick < 0)
            throw CrossCheckMismatch("maximal chain stalled before reaching its endpoint");
        g[(size_t)pick] += upper ? -1 : 1;
        solver.solve(g, pick);
    }

    Functional fn;
    fn.side = Functional::Side::Betti;
    fn.size = n;
    fn.win_lo = row_lo;
    fn.win_hi = row_hi;
    for (const auto& [cell, v] : solver.det) {
        long row = cell.second - cell.first;
        if (row >= row_lo && row <= row_hi) fn.add(cell.first, cell.second, v);
    }
    fn.make_primitive();
    return fn;
}

} // namespace

Functional upper_facet_equation(const DegreeSequence& f, int tau, long row_lo,
                                long row_hi, ChainRule rule) {
    return facet_equation(f, tau, row_lo, row_hi, rule, true);
}

Functional lower_facet_equation(const DegreeSequence& f, int tau, long row_lo,
                                long row_hi, ChainRule rule) {
    return facet_equation(f, tau, row_lo, row_hi, rule, false);
}

Functional facet_from_supernatural(const DegreeSequence& f, int tau, long row_lo,
                                   long row_hi) {
    auto neighbors = facet_neighbors(f, tau); // validates f and tau
    (void)neighbors;
    int n = (int)f.size() - 1;
    RootSequence z;
    for (int i = 0; i <= n; ++i)
        if (i != tau && i != tau + 1) z.push_back(-f[(size_t)i]);
    Rational rank(rank_gcd_bound(z));
    long a = f[(size_t)n] - n + 1;
    long d_lo = std::min(-row_hi - n, z.back() - 1);
    long d_hi = std::max(-row_lo, z.front() + 1);
    CohomologyTable monad = monad_table(z, rank, a, d_lo, d_hi);
    Functional fn = betti_functional(monad, f[(size_t)tau], tau, n, row_lo, row_hi);
    fn.make_primitive();
    Functional chain = upper_facet_equation(f, tau, row_lo, row_hi);
    if (fn.coeffs != chain.coeffs)
        throw CrossCheckMismatch("supernatural-monad facet equation disagrees with the "
                                 "chain construction");
    return fn;
}

Functional cohomology_facet(const RootSequence& z, int i) {
    check_strictly_decreasing(z);
    int m = (int)z.size();
    if (i < 1 || i > m) throw NotAFacet("index " + std::to_string(i) + " out of range 1.." +
                                        std::to_string(m));
    if (i >= 2 && z[(size_t)i - 2] == z[(size_t)i - 1] + 1)
        throw NotAFacet("z_i + 1 collides with z_{i-1}");
    if (i <= m - 1 && z[(size_t)i] == z[(size_t)i - 1] - 1)
        throw NotAFacet("z_i - 1 collides with z_{i+1}");
    DegreeSequence f;
    for (long zj : z) f.push_back(-zj);
    f.push_back(-(z[(size_t)i - 1] + 1));
    f.push_back(-(z[(size_t)i - 1] - 1));
    std::sort(f.begin(), f.end());
    int tau = (int)(std::find(f.begin(), f.end(), -z[(size_t)i - 1]) - f.begin());
    Functional fn = cohomology_functional(f, f[(size_t)tau] - 1, tau);
    fn.make_primitive();
    return fn;
}

bool diagonal_check(const Functional& fn, const DegreeSequence& f) {
    if (fn.side != Functional::Side::Betti)
        throw IncompatibleShapes("diagonal_check applies to Betti-side functionals");
    if ((int)f.size() != fn.size + 1)
        throw IncompatibleShapes("degree sequence length does not match the functional");
    for (int i = 0; i < fn.size; ++i) {
        long j_lo = fn.win_lo + i + 1; // both (i,j) and (i+1,j) rows in window
        long j_hi = std::min(fn.win_hi + i, f[(size_t)i] - 1);
        for (long j = j_lo; j <= j_hi; ++j)
            if (fn.coeff(i + 1, j) != -fn.coeff(i, j)) return false;
    }
    return true;
}

} // namespace bs
