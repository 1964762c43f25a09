#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pencil_tns/matrix.hpp"
#include "pencil_tns/tensor.hpp"

namespace ptns {

using Exponent = std::array<int, 3>;

// Homogeneous polynomial in x0, x1, x2.
class TernaryForm {
public:
    explicit TernaryForm(int degree = 0) : degree_(degree) {}
    static TernaryForm linear(const Rational& a0, const Rational& a1, const Rational& a2);
    static TernaryForm monomial(const Exponent& e, const Rational& c);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    void add(const Exponent& e, const Rational& c);

    TernaryForm derivative(int var) const;
    // f(g x), i.e. x_i -> sum_j g(i, j) x_j.
    TernaryForm substitute(const Matrix<Rational>& g) const;
    // Coefficients in the order of monomials(degree()).
    std::vector<Rational> coefficients() const;

    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(TernaryForm a, const Rational& s);
    friend TernaryForm operator+(TernaryForm a, const TernaryForm& b);
    friend TernaryForm operator-(TernaryForm a, const TernaryForm& b);
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int degree_;
    std::map<Exponent, Rational> terms_;
};

// Monomials of the given degree, x0-heavy first.
std::vector<Exponent> monomials(int degree);

// det of the 3x3 matrix of linear forms sum_a x_a T|_{slot = a}, for each slot of a 3x3x3 tensor.
std::array<TernaryForm, 3> determinantal_cubics(const Tensor<Rational>& t);

// 10 x 8 matrix of X -> X.f over a basis of sl3 (E_ij for i != j, E00 - E11, E11 - E22),
// with X.f = sum_ij X_ij x_j d_i f.
Matrix<Rational> cubic_action_matrix(const TernaryForm& f);
std::size_t cubic_action_rank(const TernaryForm& f);

}  // namespace ptns
