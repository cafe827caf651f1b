#include "bs/pairing.hpp"

#include <vector>

#include "bs/pure.hpp"

namespace bs {

Rational Functional::coeff(int a, long b) const {
    auto it = coeffs.find({a, b});
    return it == coeffs.end() ? Rational(0) : it->second;
}

void Functional::add(int a, long b, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = coeffs.try_emplace({a, b}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) coeffs.erase(it);
    }
}

void Functional::make_primitive() {
    if (coeffs.empty()) return;
    std::vector<Rational> vals;
    vals.reserve(coeffs.size());
    for (const auto& [pos, v] : coeffs) vals.push_back(v);
    Rational s = primitive_scale_factor(vals);
    for (auto& [pos, v] : coeffs) v *= s;
}

Rational evaluate(const Functional& fn, const BettiTable& b) {
    if (fn.side != Functional::Side::Betti)
        throw IncompatibleShapes("cohomology-side functional applied to a Betti table");
    Rational acc(0);
    for (const auto& [pos, val] : b.entries) {
        auto [i, k] = pos;
        if (i > fn.size)
            throw WindowTooNarrow("table has column " + std::to_string(i) +
                                  " beyond the functional's n = " + std::to_string(fn.size));
        long row = k - i;
        if (row < fn.win_lo || row > fn.win_hi)
            throw WindowTooNarrow("table entry in display row " + std::to_string(row) +
                                  " outside the functional window [" +
                                  std::to_string(fn.win_lo) + ", " +
                                  std::to_string(fn.win_hi) + "]");
        acc += fn.coeff(i, k) * val;
    }
    return acc;
}

Rational evaluate(const Functional& fn, const CohomologyTable& c) {
    if (fn.side != Functional::Side::Cohomology)
        throw IncompatibleShapes("Betti-side functional applied to a cohomology table");
    if (fn.size != c.m)
        throw IncompatibleShapes("functional for m = " + std::to_string(fn.size) +
                                 " applied to a table with m = " + std::to_string(c.m));
    Rational acc(0);
    for (const auto& [pos, v] : fn.coeffs) acc += v * c.value(pos.first, pos.second);
    return acc;
}

Rational pair(const BettiTable& b, const CohomologyTable& c) {
    Rational acc(0);
    for (const auto& [pos, val] : b.entries) {
        auto [i, k] = pos;
        for (int j = 0; j <= std::min(i, c.m); ++j) {
            Rational term = val * c.value(j, -k);
            acc += ((i - j) % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

Rational pair_modified(const BettiTable& b, const CohomologyTable& c, long cutoff, int tau) {
    Rational acc(0);
    for (const auto& [pos, val] : b.entries) {
        auto [i, k] = pos;
        for (int j = 0; j <= std::min(i, c.m); ++j) {
            bool admit = j < tau || j <= i - 2;
            if (!admit && j == tau && (i == tau || i == tau + 1))
                admit = k <= cutoff + (i - tau);
            if (!admit) continue;
            Rational term = val * c.value(j, -k);
            acc += ((i - j) % 2 == 0) ? term : -term;
        }
    }
    return acc;
}

namespace {

Functional betti_form(const CohomologyTable& c, int n, long row_lo, long row_hi,
                      bool modified, long cutoff, int tau) {
    Functional fn;
    fn.side = Functional::Side::Betti;
    fn.size = n;
    fn.win_lo = row_lo;
    fn.win_hi = row_hi;
    for (int i = 0; i <= n; ++i) {
        for (long row = row_lo; row <= row_hi; ++row) {
            long k = row + i;
            Rational coef(0);
            for (int j = 0; j <= std::min(i, c.m); ++j) {
                bool admit = !modified || j < tau || j <= i - 2;
                if (!admit && j == tau && (i == tau || i == tau + 1))
                    admit = k <= cutoff + (i - tau);
                if (!admit) continue;
                Rational term = c.value(j, -k);
                coef += ((i - j) % 2 == 0) ? term : -term;
            }
            fn.add(i, k, coef);
        }
    }
    return fn;
}

} // namespace

Functional betti_functional(const CohomologyTable& c, long cutoff, int tau, int n,
                            long row_lo, long row_hi) {
    return betti_form(c, n, row_lo, row_hi, true, cutoff, tau);
}

Functional betti_functional_unmodified(const CohomologyTable& c, int n,
                                       long row_lo, long row_hi) {
    return betti_form(c, n, row_lo, row_hi, false, 0, 0);
}

namespace {

Functional cohomology_form(const DegreeSequence& f, bool modified, long cutoff, int tau) {
    check_strictly_increasing(f);
    if (f.size() < 2) throw IncompatibleShapes("degree sequence too short");
    int n = (int)f.size() - 1;
    int m = n - 1;
    BettiTable beta = hk_pure_table(f, n);
    Functional fn;
    fn.side = Functional::Side::Cohomology;
    fn.size = m;
    fn.win_lo = -f[(size_t)n];
    fn.win_hi = -f[0];
    for (int i = 0; i <= n; ++i) {
        Rational bi = beta.get(i, f[(size_t)i]);
        for (int j = 0; j <= std::min(i, m); ++j) {
            bool admit = !modified || j < tau || j <= i - 2;
            if (!admit && j == tau && (i == tau || i == tau + 1))
                admit = f[(size_t)i] <= cutoff + (i - tau);
            if (!admit) continue;
            Rational term = ((i - j) % 2 == 0) ? bi : -bi;
            fn.add(j, -f[(size_t)i], term);
        }
    }
    return fn;
}

} // namespace

Functional cohomology_functional(const DegreeSequence& f, long cutoff, int tau) {
    return cohomology_form(f, true, cutoff, tau);
}

Functional cohomology_functional_unmodified(const DegreeSequence& f) {
    return cohomology_form(f, false, 0, 0);
}

} // namespace bs
