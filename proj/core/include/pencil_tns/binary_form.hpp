#pragma once

#include <map>
#include <string>
#include <vector>

#include "pencil_tns/poly.hpp"
#include "pencil_tns/rational.hpp"

namespace ptns {

// Homogeneous form of degree d in (v0, v1); coeff(i) multiplies v0^(d-i) v1^i.
class BinaryForm {
public:
    BinaryForm() : BinaryForm(0, {Rational()}) {}
    BinaryForm(int degree, std::vector<Rational> coeffs);
    static BinaryForm zero(int degree);
    static BinaryForm constant(const Rational& c) { return BinaryForm(0, {c}); }
    static BinaryForm linear(const Rational& z0, const Rational& z1) { return BinaryForm(1, {z0, z1}); }
    // v1^d p(v0/v1) for a polynomial p of degree <= d.
    static BinaryForm homogenize(const Poly& p, int degree);

    int degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    bool is_zero() const;

    // Multiplicity of the factor v1, i.e. of the root (1:0).
    int v1_multiplicity() const;
    // f(x, 1).
    Poly dehomogenize() const;
    Rational eval(const Rational& v0, const Rational& v1) const;
    // f(a v0 + b v1, c v0 + d v1).
    BinaryForm substitute(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;
    // Scaled so that the first nonzero coefficient is 1.
    BinaryForm normalized() const;

    friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(BinaryForm f, const Rational& s);
    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.degree_ == g.degree_ && f.c_ == g.c_;
    }

    std::string str() const;

private:
    int degree_;
    std::vector<Rational> c_;
};

BinaryForm pow(const BinaryForm& f, int e);
// Normalized gcd; gcd(0, f) = f normalized.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& d, const BinaryForm& f);
BinaryForm exact_quotient(const BinaryForm& f, const BinaryForm& d);
BinaryForm squarefree_part(const BinaryForm& f);

struct SquarefreeFactor {
    BinaryForm form;  // normalized, squarefree
    int multiplicity;
};

struct MultiplicityProfile {
    std::vector<int> partition;               // decreasing, sums to the degree
    std::map<int, int> roots_by_multiplicity;  // multiplicity -> number of distinct roots
    std::vector<SquarefreeFactor> factors;     // increasing multiplicity, pairwise coprime
    Rational content;                          // f = content * prod form^multiplicity
};

// Throws Error("zero-form") on the zero form.
MultiplicityProfile squarefree_decompose(const BinaryForm& f);

// True iff mu arises from lambda by grouping parts and summing each group.
// Throws Error("size-mismatch") when the totals differ.
bool merge_coarsening(const std::vector<int>& mu, const std::vector<int>& lambda);

}  // namespace ptns
