#pragma once

#include <random>
#include <tuple>
#include <vector>

#include "bs/betti.hpp"
#include "bs/cohomology.hpp"
#include "bs/pure.hpp"
#include "bs/sequences.hpp"
#include "bs/supernatural.hpp"

namespace bs::testing {

// The family B_x from the motivating example: n = 7, codimension 5.
inline BettiTable make_bx(long x) {
    BettiTable b;
    b.n = 7;
    b.add(0, 0, Rational(1));
    b.add(1, 2, Rational(10));
    b.add(2, 3, Rational(16));
    b.add(3, 4, Rational(x));
    b.add(2, 4, Rational(x));
    b.add(3, 5, Rational(16));
    b.add(4, 6, Rational(10));
    b.add(5, 8, Rational(1));
    return b;
}

inline BettiTable make_betti(int n, std::vector<std::tuple<int, long, long>> cells) {
    BettiTable b;
    b.n = n;
    for (auto [i, j, v] : cells) b.add(i, j, Rational(v));
    return b;
}

using Rng = std::mt19937;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational rand_coeff(Rng& rng) {
    return Rational(rand_in(rng, 1, 12)) / Rational(rand_in(rng, 1, 6));
}

inline DegreeSequence random_degree_sequence(Rng& rng, size_t len, long lo, long slack) {
    DegreeSequence d(len);
    long cur = rand_in(rng, lo, lo + 2);
    for (size_t i = 0; i < len; ++i) {
        d[i] = cur;
        cur += rand_in(rng, 1, 1 + slack);
    }
    return d;
}

// Termwise strictly increasing chain of equal-length degree sequences.
inline std::vector<DegreeSequence> random_degree_chain(Rng& rng, size_t len,
                                                       size_t chain_len) {
    std::vector<DegreeSequence> chain;
    chain.push_back(random_degree_sequence(rng, len, -3, 2));
    while (chain.size() < chain_len) {
        DegreeSequence next = chain.back();
        // Bump a random suffix-compatible subset; keep strictly increasing.
        bool bumped = false;
        for (size_t i = len; i-- > 0;) {
            bool can = (i + 1 == len) || next[i] + 1 < next[i + 1];
            if (can && rand_in(rng, 0, 1)) {
                next[i] += 1;
                bumped = true;
            }
        }
        if (!bumped) {
            next[len - 1] += 1;
            bumped = true;
        }
        chain.push_back(std::move(next));
    }
    return chain;
}

struct BettiConePoint {
    BettiTable table;
    std::vector<Rational> coeffs;
    std::vector<DegreeSequence> skeletons;
};

inline BettiConePoint random_betti_cone_point(Rng& rng, int max_n, size_t max_chain) {
    int n = (int)rand_in(rng, 2, max_n);
    size_t len = (size_t)rand_in(rng, 2, n + 1);
    size_t chain_len = (size_t)rand_in(rng, 1, (long)max_chain);
    BettiConePoint p;
    p.skeletons = random_degree_chain(rng, len, chain_len);
    p.table.n = n;
    for (const auto& d : p.skeletons) {
        Rational q = rand_coeff(rng);
        p.coeffs.push_back(q);
        p.table = add_scaled(p.table, q, hk_pure_table(d, n));
    }
    return p;
}

// Termwise strictly decreasing chain of root sequences, largest first.
inline std::vector<RootSequence> random_root_chain(Rng& rng, size_t m,
                                                   size_t chain_len) {
    std::vector<RootSequence> chain;
    RootSequence top(m);
    long cur = rand_in(rng, 2, 5);
    for (size_t i = 0; i < m; ++i) {
        top[i] = cur;
        cur -= rand_in(rng, 1, 3);
    }
    chain.push_back(top);
    while (chain.size() < chain_len) {
        RootSequence next = chain.back();
        bool moved = false;
        for (size_t i = 0; i < m; ++i) {
            bool can = (i + 1 == m) || next[i] - 1 > next[i + 1];
            if (can && rand_in(rng, 0, 1)) {
                next[i] -= 1;
                moved = true;
            }
        }
        if (!moved) next[m - 1] -= 1;
        chain.push_back(std::move(next));
    }
    return chain;
}

struct CohomologyConePoint {
    CohomologyTable table;
    std::vector<Rational> coeffs;
    std::vector<RootSequence> skeletons;
};

inline CohomologyConePoint random_cohomology_cone_point(Rng& rng, int max_m,
                                                        size_t max_chain) {
    size_t m = (size_t)rand_in(rng, 1, max_m);
    size_t chain_len = (size_t)rand_in(rng, 1, (long)max_chain);
    CohomologyConePoint p;
    p.skeletons = random_root_chain(rng, m, chain_len);
    long d_hi = p.skeletons.front().front() + 1 + rand_in(rng, 0, 2);
    long d_lo = p.skeletons.back().back() - 1 - rand_in(rng, 0, 2);
    p.table.m = (int)m;
    p.table.d_lo = d_lo;
    p.table.d_hi = d_hi;
    p.table.complete = true;
    for (const auto& z : p.skeletons) {
        Rational q = rand_coeff(rng);
        p.coeffs.push_back(q);
        p.table = add_scaled(p.table, q,
                             supernatural_table(z, Rational(rank_gcd_bound(z)), d_lo, d_hi));
    }
    return p;
}

// Random facet data: degree sequence with f_{tau+1} = f_tau + 2.
struct FacetData {
    DegreeSequence f;
    int tau;
};

inline FacetData random_facet(Rng& rng, int max_n) {
    int n = (int)rand_in(rng, 2, max_n);
    int tau = (int)rand_in(rng, 0, n - 1);
    DegreeSequence f(n + 1);
    long cur = rand_in(rng, -4, 0);
    for (int i = 0; i <= n; ++i) {
        f[i] = cur;
        cur += (i == tau) ? 2 : rand_in(rng, 1, 3);
    }
    return {f, tau};
}

inline bool same_table(const CohomologyTable& a, const CohomologyTable& b) {
    return a.m == b.m && a.d_lo == b.d_lo && a.d_hi == b.d_hi &&
           a.values == b.values && a.tail_high == b.tail_high && a.tail_low == b.tail_low;
}

} // namespace bs::testing
