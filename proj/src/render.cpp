#include "bs/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bs {

namespace {

// Left header column, then one aligned column per entry; "." for zeros.
std::string grid(const std::vector<std::string>& row_labels,
                 const std::vector<std::string>& col_labels,
                 const std::vector<std::vector<std::string>>& cells) {
    size_t rows = cells.size(), cols = col_labels.size();
    size_t label_w = 0;
    for (const auto& l : row_labels) label_w = std::max(label_w, l.size());
    std::vector<size_t> w(cols);
    for (size_t c = 0; c < cols; ++c) {
        w[c] = col_labels[c].size();
        for (size_t r = 0; r < rows; ++r) w[c] = std::max(w[c], cells[r][c].size());
    }
    std::ostringstream out;
    auto pad = [&out](const std::string& s, size_t width) {
        out << std::string(width - s.size(), ' ') << s;
    };
    pad("", label_w);
    for (size_t c = 0; c < cols; ++c) {
        out << "  ";
        pad(col_labels[c], w[c]);
    }
    out << '\n';
    for (size_t r = 0; r < rows; ++r) {
        pad(row_labels[r], label_w);
        for (size_t c = 0; c < cols; ++c) {
            out << "  ";
            pad(cells[r][c], w[c]);
        }
        out << '\n';
    }
    return out.str();
}

std::string cell(const Rational& v) { return v == 0 ? "." : format_rational(v); }

std::string betti_grid(int n, long row_lo, long row_hi,
                       const std::map<std::pair<int, long>, Rational>& entries) {
    std::vector<std::string> rlab, clab;
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i <= n; ++i) clab.push_back(std::to_string(i));
    auto get = [&entries](int i, long j) {
        auto it = entries.find({i, j});
        return it == entries.end() ? Rational(0) : it->second;
    };
    for (long row = row_lo; row <= row_hi; ++row) {
        rlab.push_back(std::to_string(row) + ":");
        std::vector<std::string> line;
        for (int i = 0; i <= n; ++i) line.push_back(cell(get(i, row + i)));
        cells.push_back(std::move(line));
    }
    return grid(rlab, clab, cells);
}

std::string cohomology_grid(int m, long d_lo, long d_hi,
                            const std::map<std::pair<int, long>, Rational>& values) {
    std::vector<std::string> rlab, clab;
    std::vector<std::vector<std::string>> cells;
    for (long d = d_lo; d <= d_hi + m; ++d) clab.push_back(std::to_string(d));
    auto get = [&values](int i, long d) {
        auto it = values.find({i, d});
        return it == values.end() ? Rational(0) : it->second;
    };
    for (int i = m; i >= 0; --i) {
        rlab.push_back(std::to_string(i) + ":");
        std::vector<std::string> line;
        for (long col = d_lo; col <= d_hi + m; ++col) {
            long d = col - i;
            line.push_back(d >= d_lo && d <= d_hi ? cell(get(i, d)) : ".");
        }
        cells.push_back(std::move(line));
    }
    return grid(rlab, clab, cells);
}

} // namespace

std::string render_betti(const BettiTable& b) {
    if (b.entries.empty()) return "(empty table)\n";
    long row_lo = 0, row_hi = 0;
    bool first = true;
    for (const auto& [pos, val] : b.entries) {
        long row = pos.second - pos.first;
        if (first || row < row_lo) row_lo = row;
        if (first || row > row_hi) row_hi = row;
        first = false;
    }
    return betti_grid(b.max_col(), row_lo, row_hi, b.entries);
}

std::string render_cohomology(const CohomologyTable& c) {
    std::ostringstream out;
    out << cohomology_grid(c.m, c.d_lo, c.d_hi, c.values);
    out << "tail_high: " << c.tail_high.to_string() << '\n';
    out << "tail_low:  " << c.tail_low.to_string() << '\n';
    return out.str();
}

std::string render_functional(const Functional& f) {
    if (f.side == Functional::Side::Betti)
        return betti_grid(f.size, f.win_lo, f.win_hi, f.coeffs);
    return cohomology_grid(f.size, f.win_lo, f.win_hi, f.coeffs);
}

} // namespace bs
