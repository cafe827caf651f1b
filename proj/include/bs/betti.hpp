#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bs/poly.hpp"
#include "bs/rational.hpp"
#include "bs/sequences.hpp"

namespace bs {

// Finitely supported table beta_{i,j}: column i = homological index
// (0 <= i <= n), j = internal degree. Only nonzero entries are stored.
// Display convention: column i, row l holds beta_{i,i+l}.
struct BettiTable {
    int n = 0;
    std::map<std::pair<int, long>, Rational> entries;

    Rational get(int i, long j) const;
    // Accumulates v into (i, j), erasing the cell when it becomes zero.
    void add(int i, long j, const Rational& v);
    bool is_zero() const { return entries.empty(); }
    // Largest column with a nonzero entry; -1 for the empty table.
    int max_col() const;
    size_t nnz() const { return entries.size(); }
};

struct Diagnostics {
    bool ok = true;
    std::vector<std::string> issues;
    void fail(const std::string& msg) { ok = false; issues.push_back(msg); }
};

Diagnostics validate_betti(const BettiTable& b);

// (d_0,...,d_c) with d_i = min{ j : beta_{i,j} != 0 }, c = max_col.
// Throws GapInColumns if an empty column precedes a nonzero one,
// NotStrictlyIncreasing if the minima do not strictly increase.
DegreeSequence column_min_degrees(const BettiTable& b);

// p_M(d) = sum_j p_S(d-j) sum_i (-1)^i beta_{i,j}, p_S(t) = binom(t+n-1, n-1).
Poly hilbert_polynomial(const BettiTable& b);

BettiTable add_scaled(const BettiTable& a, const Rational& coeff, const BettiTable& b);

} // namespace bs
