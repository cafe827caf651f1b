#include "bs/cohomology.hpp"

#include <algorithm>

#include "bs/exact.hpp"

namespace bs {

Rational CohomologyTable::window_value(int i, long d) const {
    auto it = values.find({i, d});
    return it == values.end() ? Rational(0) : it->second;
}

Rational CohomologyTable::value(int i, long d) const {
    if (i < 0 || i > m) return Rational(0);
    if (d >= d_lo && d <= d_hi) return window_value(i, d);
    if (i == 0) return d > d_hi ? tail_high(Rational(d)) : Rational(0);
    if (i == m) return d < d_lo ? tail_low(Rational(d)) : Rational(0);
    if (!complete)
        throw IncompleteTable("value of row " + std::to_string(i) + " at twist " +
                              std::to_string(d) + " outside the window of an incomplete table");
    return Rational(0);
}

void CohomologyTable::add(int i, long d, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = values.try_emplace({i, d}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) values.erase(it);
    }
}

bool CohomologyTable::is_zero() const {
    return values.empty() && tail_high.is_zero() && tail_low.is_zero();
}

namespace {

// Display-column support bounds of one row, tails included.
struct RowSupport {
    bool empty = true;
    ExtInt min_col, max_col;
};

RowSupport row_support(const CohomologyTable& c, int i) {
    RowSupport s;
    for (const auto& [pos, val] : c.values) {
        if (pos.first != i) continue;
        ExtInt col = ExtInt::of(pos.second + i);
        if (s.empty) {
            s.min_col = s.max_col = col;
            s.empty = false;
        } else {
            s.min_col = min(s.min_col, col);
            s.max_col = max(s.max_col, col);
        }
    }
    if (i == 0 && !c.tail_high.is_zero()) {
        long stop = std::max(c.d_hi + 1, sign_stable_bound(c.tail_high) + 1);
        long first = c.d_hi + 1;
        while (c.tail_high.at(first) == 0 && first < stop) ++first;
        ExtInt lo = ExtInt::of(first);
        s.min_col = s.empty ? lo : min(s.min_col, lo);
        s.max_col = ExtInt::pos_inf();
        s.empty = false;
    }
    if (i == c.m && !c.tail_low.is_zero()) {
        long stop = std::min(c.d_lo - 1, -sign_stable_bound(c.tail_low) - 1);
        long last = c.d_lo - 1;
        while (c.tail_low.at(last) == 0 && last > stop) --last;
        ExtInt hi = ExtInt::of(last + i);
        s.max_col = s.empty ? hi : max(s.max_col, hi);
        s.min_col = ExtInt::neg_inf();
        s.empty = false;
    }
    return s;
}

} // namespace

CohomologyRange cohomology_range(const CohomologyTable& c) {
    if (!c.complete)
        throw WindowTooNarrow("cohomology_range requires a complete table");
    if (c.is_zero()) throw EmptyTable("cohomology_range of the zero table");

    std::vector<RowSupport> rows(c.m + 1);
    for (int i = 0; i <= c.m; ++i) rows[i] = row_support(c, i);

    CohomologyRange out;
    out.r.assign(c.m + 2, ExtInt::pos_inf());
    out.R.assign(c.m + 1, ExtInt::neg_inf());
    // r_i = least column where some row j < i is nonzero.
    for (int i = 1; i <= c.m + 1; ++i) {
        ExtInt acc = ExtInt::pos_inf();
        for (int j = 0; j < i; ++j)
            if (!rows[j].empty) acc = min(acc, rows[j].min_col);
        out.r[i] = acc;
    }
    // R_i = 1 + greatest column where some row j >= i is nonzero.
    for (int i = 0; i <= c.m; ++i) {
        ExtInt acc = ExtInt::neg_inf();
        for (int j = i; j <= c.m; ++j)
            if (!rows[j].empty) acc = max(acc, rows[j].max_col);
        out.R[i] = acc + 1;
    }
    return out;
}

Diagnostics validate_cohomology(const CohomologyTable& c) {
    Diagnostics diag;
    if (c.d_lo > c.d_hi) diag.fail("empty window");
    if (c.is_zero()) diag.fail("table is identically zero");
    if (c.tail_high.degree() > c.m) diag.fail("tail_high degree exceeds m");
    if (c.tail_low.degree() > c.m) diag.fail("tail_low degree exceeds m");

    for (const auto& [pos, val] : c.values) {
        auto [i, d] = pos;
        if (i < 0 || i > c.m)
            diag.fail("row " + std::to_string(i) + " outside 0.." + std::to_string(c.m));
        if (d < c.d_lo || d > c.d_hi)
            diag.fail("twist " + std::to_string(d) + " outside the window");
        if (val < 0)
            diag.fail("negative entry at (" + std::to_string(i) + ", " + std::to_string(d) + ")");
    }

    // Tail nonnegativity on their regimes out to the sign-stable bound.
    if (!c.tail_high.is_zero()) {
        long stop = std::max(c.d_hi + 1, sign_stable_bound(c.tail_high) + 1);
        for (long d = c.d_hi + 1; d <= stop; ++d)
            if (c.tail_high.at(d) < 0) {
                diag.fail("tail_high negative at twist " + std::to_string(d));
                break;
            }
    }
    if (!c.tail_low.is_zero()) {
        long stop = std::min(c.d_lo - 1, -sign_stable_bound(c.tail_low) - 1);
        for (long d = c.d_lo - 1; d >= stop; --d)
            if (c.tail_low.at(d) < 0) {
                diag.fail("tail_low negative at twist " + std::to_string(d));
                break;
            }
    }
    if (!diag.ok) return diag;

    // Column checks over the display columns meeting the window, middle rows
    // outside the window treated as zero (exact when complete).
    auto col_value = [&](int i, long col) -> Rational {
        long d = col - i;
        if (d >= c.d_lo && d <= c.d_hi) return c.window_value(i, d);
        if (i == 0 && d > c.d_hi) return c.tail_high(Rational(d));
        if (i == c.m && d < c.d_lo) return c.tail_low(Rational(d));
        return Rational(0);
    };
    bool have_prev = false;
    int prev_max = 0, prev_min = 0;
    for (long col = c.d_lo; col <= c.d_hi + c.m; ++col) {
        int max_i = -1, min_i = -1;
        for (int i = 0; i <= c.m; ++i)
            if (col_value(i, col) != 0) {
                if (min_i < 0) min_i = i;
                max_i = i;
            }
        if (max_i < 0) {
            diag.fail("display column " + std::to_string(col) + " has no nonzero entry");
            continue;
        }
        if (have_prev && (max_i > prev_max || min_i > prev_min))
            diag.fail("row support jumps up at display column " + std::to_string(col));
        prev_max = max_i;
        prev_min = min_i;
        have_prev = true;
    }
    return diag;
}

CohomologyTable add_scaled(const CohomologyTable& a, const Rational& coeff,
                           const CohomologyTable& b) {
    if (a.m != b.m || a.d_lo != b.d_lo || a.d_hi != b.d_hi)
        throw IncompatibleShapes("cohomology tables with different m or windows");
    CohomologyTable r = a;
    r.complete = a.complete && b.complete;
    for (const auto& [pos, val] : b.values) r.add(pos.first, pos.second, coeff * val);
    r.tail_high = a.tail_high + b.tail_high * coeff;
    r.tail_low = a.tail_low + b.tail_low * coeff;
    return r;
}

} // namespace bs
