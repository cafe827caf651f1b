#pragma once

#include <string>
#include <vector>

#include "bs/errors.hpp"

namespace bs {

// Strictly increasing integers d_0 < ... < d_c.
using DegreeSequence = std::vector<long>;
// Strictly decreasing integers z_1 > ... > z_m.
using RootSequence = std::vector<long>;

void check_strictly_increasing(const DegreeSequence& d);
void check_strictly_decreasing(const RootSequence& z);

// Termwise partial order on equal-length sequences.
bool termwise_leq(const std::vector<long>& a, const std::vector<long>& b);
bool termwise_lt(const std::vector<long>& a, const std::vector<long>& b);

std::string sequence_to_string(const std::vector<long>& s);

// Integer extended with +/- infinity, for cohomology ranges.
struct ExtInt {
    int inf = 0; // -1, 0, +1
    long v = 0;

    static ExtInt neg_inf() { return {-1, 0}; }
    static ExtInt pos_inf() { return {+1, 0}; }
    static ExtInt of(long x) { return {0, x}; }

    bool is_finite() const { return inf == 0; }
    long finite() const;

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.inf == b.inf && (a.inf != 0 || a.v == b.v);
    }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.inf != b.inf) return a.inf < b.inf;
        return a.inf == 0 && a.v < b.v;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }

    ExtInt operator+(long x) const { return inf != 0 ? *this : of(v + x); }
    std::string to_string() const;
};

inline ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

} // namespace bs
