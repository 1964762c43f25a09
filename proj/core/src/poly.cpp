#include "pencil_tns/poly.hpp"

#include "pencil_tns/error.hpp"

namespace ptns {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int exp) {
    std::vector<Rational> v(static_cast<size_t>(exp) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational();
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error("zero-polynomial");
    return c_.back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        if (c.sign() < 0) cs = (-c).str();
        bool unit = cs == "1" && i > 0;
        if (!unit) out += cs;
        if (i > 0) out += (unit ? "" : "*") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("division-by-zero");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db + 1));
    Rational inv = b.leading().inverse();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<size_t>(i)] * inv;
        if (c.is_zero()) continue;
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
    }
    rem.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly pow(const Poly& p, int e) {
    Poly acc = Poly::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& f) {
    if (f.is_constant()) return {};
    std::vector<std::pair<Poly, int>> out;
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f / a;
    Poly c = fp / a;
    Poly d = c - b.derivative();
    for (int i = 1; !b.is_constant(); ++i) {
        Poly ai = gcd(b, d);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        if (!ai.is_constant()) out.emplace_back(ai.monic(), i);
    }
    return out;
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences.
    size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    Poly result;
    for (size_t k = n; k-- > 0;) {
        result = result * Poly(std::vector<Rational>{-xs[k], Rational(1)}) + Poly::constant(dd[k]);
    }
    return result;
}

}  // namespace ptns
