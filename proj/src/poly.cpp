#include "bs/poly.hpp"

#include <sstream>

#include "bs/errors.hpp"

namespace bs {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    // mpq accepts more than we want (whitespace, hex); keep it strict.
    size_t slash = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '-') {
            if (i != 0) throw ParseError("misplaced '-' in rational: " + s);
        } else if (ch == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == s.size())
                throw ParseError("malformed rational: " + s);
            slash = i;
        } else if (ch < '0' || ch > '9') {
            throw ParseError("invalid character in rational: " + s);
        }
    }
    if (s == "-") throw ParseError("malformed rational: " + s);
    try {
        Rational q(s);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + s);
    }
}

std::string format_rational(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_str();
}

Rational primitive_scale_factor(const std::vector<Rational>& vals) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& v : vals) {
        if (v == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    Rational s(den_lcm, abs(num_gcd));
    s.canonicalize();
    return s;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::lead() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (o * Rational(-1));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational((long)i);
    return Poly(std::move(r));
}

Poly Poly::reflected() const {
    std::vector<Rational> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
}

Poly Poly::from_int_roots(const std::vector<long>& roots) {
    Poly p = Poly::constant(Rational(1));
    for (long z : roots) p = p * Poly{Rational(-z), Rational(1)};
    return p;
}

Poly Poly::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton's divided differences.
    size_t k = points.size();
    std::vector<Rational> dd(k);
    for (size_t i = 0; i < k; ++i) dd[i] = points[i].second;
    for (size_t level = 1; level < k; ++level)
        for (size_t i = k - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx == 0) throw ParseError("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    Poly p;
    for (size_t i = k; i-- > 0;) {
        p = p * Poly{-points[i].first, Rational(1)} + Poly::constant(dd[i]);
    }
    return p;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Rational a = abs(c_[i]);
        if (a != 1 || i == 0) os << format_rational(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << "d";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace bs
