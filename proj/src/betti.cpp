#include "bs/betti.hpp"

#include "bs/exact.hpp"

namespace bs {

Rational BettiTable::get(int i, long j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Rational(0) : it->second;
}

void BettiTable::add(int i, long j, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = entries.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries.erase(it);
    }
}

int BettiTable::max_col() const {
    int c = -1;
    for (const auto& [pos, val] : entries) c = std::max(c, pos.first);
    return c;
}

Diagnostics validate_betti(const BettiTable& b) {
    Diagnostics d;
    if (b.entries.empty()) d.fail("empty table: no generator column");
    for (const auto& [pos, val] : b.entries) {
        auto [i, j] = pos;
        if (i < 0 || i > b.n)
            d.fail("entry at column " + std::to_string(i) + " outside 0.." + std::to_string(b.n));
        if (val < 0)
            d.fail("negative entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
    return d;
}

DegreeSequence column_min_degrees(const BettiTable& b) {
    int c = b.max_col();
    if (c < 0) throw EmptyTable("column_min_degrees of an empty table");
    DegreeSequence d(c + 1);
    std::vector<bool> seen(c + 1, false);
    for (const auto& [pos, val] : b.entries) {
        auto [i, j] = pos;
        if (!seen[i] || j < d[i]) d[i] = j;
        seen[i] = true;
    }
    for (int i = 0; i <= c; ++i)
        if (!seen[i])
            throw GapInColumns("column " + std::to_string(i) +
                               " is empty but a later column is not");
    check_strictly_increasing(d);
    return d;
}

Poly hilbert_polynomial(const BettiTable& b) {
    Poly p;
    for (const auto& [pos, val] : b.entries) {
        auto [i, j] = pos;
        Rational sign = (i % 2 == 0) ? val : -val;
        p = p + binomial_poly(b.n - 1 - j, (unsigned long)(b.n - 1)) * sign;
    }
    return p;
}

BettiTable add_scaled(const BettiTable& a, const Rational& coeff, const BettiTable& b) {
    if (a.n != b.n)
        throw IncompatibleShapes("Betti tables over different n: " + std::to_string(a.n) +
                                 " vs " + std::to_string(b.n));
    BettiTable r = a;
    for (const auto& [pos, val] : b.entries) r.add(pos.first, pos.second, coeff * val);
    return r;
}

} // namespace bs
