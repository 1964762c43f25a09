#include "pencil_tns/cubic.hpp"

namespace ptns {

TernaryForm TernaryForm::linear(const Rational& a0, const Rational& a1, const Rational& a2) {
    TernaryForm f(1);
    f.add({1, 0, 0}, a0);
    f.add({0, 1, 0}, a1);
    f.add({0, 0, 1}, a2);
    return f;
}

TernaryForm TernaryForm::monomial(const Exponent& e, const Rational& c) {
    TernaryForm f(e[0] + e[1] + e[2]);
    f.add(e, c);
    return f;
}

Rational TernaryForm::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void TernaryForm::add(const Exponent& e, const Rational& c) {
    if (e[0] + e[1] + e[2] != degree_) throw Error("degree-mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TernaryForm TernaryForm::derivative(int var) const {
    TernaryForm d(degree_ > 0 ? degree_ - 1 : 0);
    for (auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(var)] == 0) continue;
        Exponent f = e;
        --f[static_cast<std::size_t>(var)];
        d.add(f, c * Rational(static_cast<long>(e[static_cast<std::size_t>(var)])));
    }
    return d;
}

TernaryForm TernaryForm::substitute(const Matrix<Rational>& g) const {
    std::array<TernaryForm, 3> img;
    for (std::size_t i = 0; i < 3; ++i) img[i] = linear(g(i, 0), g(i, 1), g(i, 2));
    TernaryForm out(degree_);
    for (auto& [e, c] : terms_) {
        TernaryForm term = TernaryForm::monomial({0, 0, 0}, c);
        for (std::size_t i = 0; i < 3; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * img[i];
        out = out + term;
    }
    return out;
}

std::vector<Rational> TernaryForm::coefficients() const {
    std::vector<Rational> out;
    for (auto& e : monomials(degree_)) out.push_back(coeff(e));
    return out;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r(a.degree_ + b.degree_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

TernaryForm operator*(TernaryForm a, const Rational& s) {
    if (s.is_zero()) return TernaryForm(a.degree_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
}

TernaryForm operator+(TernaryForm a, const TernaryForm& b) {
    for (auto& [e, c] : b.terms_) a.add(e, c);
    return a;
}

TernaryForm operator-(TernaryForm a, const TernaryForm& b) {
    for (auto& [e, c] : b.terms_) a.add(e, -c);
    return a;
}

std::string TernaryForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        for (std::size_t i = 0; i < 3; ++i)
            if (e[i] > 0) out += "*x" + std::to_string(i) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out;
}

std::vector<Exponent> monomials(int degree) {
    std::vector<Exponent> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
    return out;
}

std::array<TernaryForm, 3> determinantal_cubics(const Tensor<Rational>& t) {
    if (t.shape() != Shape{3, 3, 3}) throw InputError("expected a 3x3x3 tensor");
    std::array<TernaryForm, 3> out;
    for (std::size_t s = 0; s < 3; ++s) {
        std::array<std::array<TernaryForm, 3>, 3> m;
        for (auto& row : m) row.fill(TernaryForm(1));
        for (std::size_t off = 0; off < t.size(); ++off) {
            const Rational& v = t.entries()[off];
            if (v.is_zero()) continue;
            Index idx = t.unravel(off);
            std::size_t r = idx[s == 0 ? 1 : 0], c = idx[s == 2 ? 1 : 2];
            Exponent e{0, 0, 0};
            e[idx[s]] = 1;
            m[r][c].add(e, v);
        }
        TernaryForm det(3);
        const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
        for (int p = 0; p < 6; ++p) {
            TernaryForm term = m[0][static_cast<std::size_t>(perms[p][0])] * m[1][static_cast<std::size_t>(perms[p][1])] *
                               m[2][static_cast<std::size_t>(perms[p][2])];
            det = p < 3 ? det + term : det - term;
        }
        out[s] = det;
    }
    return out;
}

Matrix<Rational> cubic_action_matrix(const TernaryForm& f) {
    if (f.degree() != 3) throw InputError("expected a cubic");
    std::array<TernaryForm, 3> grad{f.derivative(0), f.derivative(1), f.derivative(2)};
    auto x = [](int j) {
        Exponent e{0, 0, 0};
        e[static_cast<std::size_t>(j)] = 1;
        return TernaryForm::monomial(e, Rational(1));
    };
    std::vector<TernaryForm> images;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) images.push_back(x(j) * grad[static_cast<std::size_t>(i)]);
    TernaryForm euler0 = x(0) * grad[0], euler1 = x(1) * grad[1], euler2 = x(2) * grad[2];
    images.push_back(euler0 - euler1);
    images.push_back(euler1 - euler2);

    Matrix<Rational> m(10, 8);
    for (std::size_t c = 0; c < images.size(); ++c) {
        auto coeffs = images[c].coefficients();
        for (std::size_t r = 0; r < 10; ++r) m(r, c) = coeffs[r];
    }
    return m;
}

std::size_t cubic_action_rank(const TernaryForm& f) { return rank(cubic_action_matrix(f)); }

}  // namespace ptns
