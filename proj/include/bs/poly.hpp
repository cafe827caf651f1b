#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bs/rational.hpp"

namespace bs {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& v) { return Poly{std::vector<Rational>{v}}; }
    // The monic product prod_i (d - roots[i]).
    static Poly from_int_roots(const std::vector<long>& roots);
    // Unique polynomial of degree < points.size() through the given (x, y).
    static Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const;
    Rational coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;
    Rational at(long x) const { return (*this)(Rational(x)); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly operator-() const { return *this * Rational(-1); }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly derivative() const;
    // p(-d); used to analyze low-twist tails by reflection.
    Poly reflected() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace bs
