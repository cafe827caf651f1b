#include "bs/sequences.hpp"

#include <sstream>

namespace bs {

void check_strictly_increasing(const DegreeSequence& d) {
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] <= d[i - 1])
            throw NotStrictlyIncreasing("degree sequence not strictly increasing: " +
                                        sequence_to_string(d));
}

void check_strictly_decreasing(const RootSequence& z) {
    for (size_t i = 1; i < z.size(); ++i)
        if (z[i] >= z[i - 1])
            throw NotStrictlyDecreasing("root sequence not strictly decreasing: " +
                                        sequence_to_string(z));
}

bool termwise_leq(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool termwise_lt(const std::vector<long>& a, const std::vector<long>& b) {
    return termwise_leq(a, b) && a != b;
}

std::string sequence_to_string(const std::vector<long>& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << ")";
    return os.str();
}

long ExtInt::finite() const {
    if (inf != 0) throw Error("InfiniteValue", "expected a finite extended integer");
    return v;
}

std::string ExtInt::to_string() const {
    if (inf < 0) return "-inf";
    if (inf > 0) return "inf";
    return std::to_string(v);
}

} // namespace bs
