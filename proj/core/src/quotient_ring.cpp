#include "pencil_tns/quotient_ring.hpp"

#include <algorithm>

#include "pencil_tns/error.hpp"
#include "pencil_tns/matrix.hpp"

namespace ptns {

QuotientRing QuotientRing::constant(int k, const Rational& c, const Rational& v) {
    if (k < 1) throw InputError("quotient ring needs k >= 1");
    QuotientRing r;
    r.k_ = k;
    r.c_ = c;
    r.rep_.assign(static_cast<size_t>(k), Rational());
    r.rep_[0] = v;
    return r;
}

QuotientRing QuotientRing::generator(int k, const Rational& c) {
    QuotientRing r = constant(k, c, Rational());
    if (k == 1) r.rep_[0] = c;
    else r.rep_[1] = Rational(1);
    return r;
}

void QuotientRing::bind(const QuotientRing& o) {
    if (o.k_ == 0) return;
    if (k_ == 0) {
        k_ = o.k_;
        c_ = o.c_;
        rep_.resize(static_cast<size_t>(k_));
        return;
    }
    if (k_ != o.k_ || c_ != o.c_) throw Error("ring-mismatch");
}

bool QuotientRing::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](const Rational& r) { return r.is_zero(); });
}

QuotientRing& QuotientRing::operator+=(const QuotientRing& o) {
    bind(o);
    if (rep_.size() < o.rep_.size()) rep_.resize(o.rep_.size());
    for (size_t i = 0; i < o.rep_.size(); ++i) rep_[i] += o.rep_[i];
    return *this;
}

QuotientRing& QuotientRing::operator-=(const QuotientRing& o) {
    bind(o);
    if (rep_.size() < o.rep_.size()) rep_.resize(o.rep_.size());
    for (size_t i = 0; i < o.rep_.size(); ++i) rep_[i] -= o.rep_[i];
    return *this;
}

QuotientRing QuotientRing::operator-() const {
    QuotientRing r = *this;
    for (auto& x : r.rep_) x = -x;
    return r;
}

QuotientRing operator*(const QuotientRing& a, const QuotientRing& b) {
    QuotientRing r;
    r.bind(a);
    r.bind(b);
    if (r.k_ == 0) return QuotientRing(a.at(0) * b.at(0));
    size_t k = static_cast<size_t>(r.k_);
    for (size_t i = 0; i < a.rep_.size(); ++i) {
        if (a.rep_[i].is_zero()) continue;
        for (size_t j = 0; j < b.rep_.size(); ++j) {
            Rational t = a.rep_[i] * b.rep_[j];
            size_t e = i + j;
            if (e >= k) {
                t *= r.c_;
                e -= k;
            }
            r.rep_[e] += t;
        }
    }
    return r;
}

bool operator==(const QuotientRing& a, const QuotientRing& b) {
    size_t n = std::max(a.rep_.size(), b.rep_.size());
    for (size_t i = 0; i < n; ++i)
        if (a.at(i) != b.at(i)) return false;
    if (a.k_ && b.k_ && (a.k_ != b.k_ || a.c_ != b.c_)) return false;
    return true;
}

QuotientRing QuotientRing::inverse() const {
    if (k_ == 0) {
        if (is_zero()) throw Error("division-by-zero");
        return QuotientRing(at(0).inverse());
    }
    // Solve (multiplication by *this) x = 1.
    size_t k = static_cast<size_t>(k_);
    Matrix<Rational> mul(k, k);
    QuotientRing basis = constant(k_, c_, Rational(1));
    QuotientRing mu = generator(k_, c_);
    for (size_t j = 0; j < k; ++j) {
        QuotientRing col = *this * basis;
        for (size_t i = 0; i < k; ++i) mul(i, j) = col.rep_[i];
        basis = basis * mu;
    }
    Matrix<Rational> rhs(k, 1);
    rhs(0, 0) = Rational(1);
    auto sol = solve(mul, rhs);
    if (!sol) throw Error("not-invertible", str());
    QuotientRing r = constant(k_, c_, Rational());
    for (size_t i = 0; i < k; ++i) r.rep_[i] = (*sol)(i, 0);
    return r;
}

std::string QuotientRing::str() const {
    std::string out;
    for (size_t i = 0; i < rep_.size(); ++i) {
        if (rep_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + rep_[i].str() + ")";
        if (i > 0) out += "*mu" + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return out.empty() ? "0" : out;
}

}  // namespace ptns
