#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pencil_tns/rational.hpp"

namespace ptns {

// Dense univariate polynomial over Q; coefficient i multiplies x^i. Always trimmed.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int exp);
    static Poly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Poly monic() const;
    Poly derivative() const;
    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    Poly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& p, int e);

// Yun's squarefree decomposition of a nonconstant polynomial:
// f = lc(f) * prod a_i^i with a_i monic, squarefree and pairwise coprime.
// Only nonconstant a_i are returned, in increasing multiplicity.
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& f);

// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace ptns
