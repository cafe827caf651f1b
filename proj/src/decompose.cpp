#include "bs/decompose.hpp"

#include <optional>

#include "bs/exact.hpp"
#include "bs/pure.hpp"
#include "bs/supernatural.hpp"

namespace bs {

BettiDecomposition decompose_betti(const BettiTable& b) {
    Diagnostics diag = validate_betti(b);
    if (!diag.ok) throw NotInCone("invalid Betti table: " + diag.issues.front());

    BettiDecomposition dec;
    BettiTable cur = b;
    size_t max_steps = b.nnz();
    for (size_t step = 0; !cur.is_zero(); ++step) {
        if (step >= max_steps)
            throw NotInCone("greedy did not terminate within " + std::to_string(max_steps) +
                            " steps; some step failed to zero an entry");
        DegreeSequence d;
        try {
            d = column_min_degrees(cur);
        } catch (const Error& e) {
            throw NotInCone(std::string("pivot failed on a nonzero remainder: ") + e.what());
        }
        if (!dec.parts.empty() && !termwise_lt(dec.parts.back().skeleton, d))
            throw NotInCone("pivots do not form a chain: " +
                            sequence_to_string(dec.parts.back().skeleton) + " then " +
                            sequence_to_string(d));
        BettiTable alpha = hk_pure_table(d, b.n);
        std::optional<Rational> r;
        for (size_t i = 0; i < d.size(); ++i) {
            Rational ratio = cur.get((int)i, d[i]) / alpha.get((int)i, d[i]);
            if (!r || ratio < *r) r = ratio;
        }
        if (!r || *r <= 0)
            throw NotInCone("no positive multiple of the pure table of " +
                            sequence_to_string(d) + " fits under the remainder");
        BettiTable next = add_scaled(cur, -*r, alpha);
        BettiPart part{*r, d, alpha, {}};
        for (const auto& [pos, val] : cur.entries)
            if (next.get(pos.first, pos.second) == 0) part.zeroed.push_back(pos);
        dec.parts.push_back(std::move(part));
        cur = std::move(next);
    }
    return dec;
}

bool verify_betti_decomposition(const BettiTable& input, const BettiDecomposition& dec) {
    BettiTable acc;
    acc.n = input.n;
    const DegreeSequence* prev = nullptr;
    for (const auto& part : dec.parts) {
        if (part.coeff <= 0) return false;
        if (prev && !termwise_lt(*prev, part.skeleton)) return false;
        prev = &part.skeleton;
        acc = add_scaled(acc, part.coeff, part.table);
    }
    return add_scaled(acc, Rational(-1), input).is_zero();
}

CohomologyDecomposition decompose_cohomology(const CohomologyTable& c) {
    if (!c.complete) throw IncompleteTable("decompose_cohomology requires a complete table");
    Diagnostics diag = validate_cohomology(c);
    if (!diag.ok) throw NotInCone("invalid cohomology table: " + diag.issues.front());

    CohomologyDecomposition dec;
    CohomologyTable cur = c;
    // Window steps each zero a cell; tail-limited steps drop a tail degree.
    size_t max_steps = c.nnz() + 2 * (size_t)(c.m + 2) + 2;
    for (size_t step = 0; !cur.is_zero(); ++step) {
        if (step >= max_steps)
            throw NotInCone("greedy did not terminate within " + std::to_string(max_steps) +
                            " steps");
        CohomologyRange range = cohomology_range(cur);
        RootSequence z((size_t)cur.m);
        for (int i = 1; i <= cur.m; ++i) {
            if (!range.R[i].is_finite())
                throw NotInCone("R_" + std::to_string(i) + " is infinite; no supernatural pivot");
            z[i - 1] = range.R[i].finite() - i;
        }
        try {
            check_strictly_decreasing(z);
        } catch (const Error& e) {
            throw NotInCone(std::string("pivot roots invalid: ") + e.what());
        }
        if (!dec.parts.empty() && !termwise_lt(z, dec.parts.back().skeleton))
            throw NotInCone("pivots do not form a chain: " +
                            sequence_to_string(dec.parts.back().skeleton) + " then " +
                            sequence_to_string(z));
        if (c.d_lo > z.back() - 1 || c.d_hi < z.front() + 1)
            throw WindowTooNarrow("pivot " + sequence_to_string(z) +
                                  " needs window [" + std::to_string(z.back() - 1) + ", " +
                                  std::to_string(z.front() + 1) + "]");
        CohomologyTable sub = supernatural_table(z, Rational(rank_gcd_bound(z)), c.d_lo, c.d_hi);

        std::optional<Rational> q;
        auto consider = [&q](const Rational& v) {
            if (!q || v < *q) q = v;
        };
        for (const auto& [pos, val] : sub.values)
            consider(cur.window_value(pos.first, pos.second) / val);
        consider(tail_ratio_inf(cur.tail_high, sub.tail_high, c.d_hi));
        consider(tail_ratio_inf(cur.tail_low.reflected(), sub.tail_low.reflected(), -c.d_lo));
        if (!q || *q <= 0)
            throw NotInCone("no positive multiple of the supernatural table of " +
                            sequence_to_string(z) + " fits under the remainder");

        cur = add_scaled(cur, -*q, sub);
        dec.parts.push_back({*q, z, std::move(sub)});
    }
    return dec;
}

bool verify_cohomology_decomposition(const CohomologyTable& input,
                                     const CohomologyDecomposition& dec) {
    CohomologyTable acc;
    acc.m = input.m;
    acc.d_lo = input.d_lo;
    acc.d_hi = input.d_hi;
    acc.complete = true;
    const RootSequence* prev = nullptr;
    for (const auto& part : dec.parts) {
        if (part.coeff <= 0) return false;
        // Greedy emission order: strictly decreasing chains.
        if (prev && !termwise_lt(part.skeleton, *prev)) return false;
        prev = &part.skeleton;
        acc = add_scaled(acc, part.coeff, part.table);
    }
    return add_scaled(acc, Rational(-1), input).is_zero();
}

BettiConeResult is_in_cone(const BettiTable& b) {
    BettiConeResult r;
    if (b.is_zero()) {
        r.in_cone = true;
        r.certificate = BettiDecomposition{};
        return r;
    }
    try {
        r.certificate = decompose_betti(b);
        r.in_cone = true;
    } catch (const NotInCone& e) {
        r.evidence = e.what();
    }
    return r;
}

CohomologyConeResult is_in_cone(const CohomologyTable& c) {
    CohomologyConeResult r;
    if (c.is_zero()) {
        r.in_cone = true;
        r.certificate = CohomologyDecomposition{};
        return r;
    }
    try {
        r.certificate = decompose_cohomology(c);
        r.in_cone = true;
    } catch (const NotInCone& e) {
        r.evidence = e.what();
    }
    return r;
}

} // namespace bs
