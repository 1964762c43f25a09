#pragma once

#include <map>
#include <optional>
#include <string>

#include "pencil_tns/error.hpp"

namespace ptns {

// Laurent polynomial in eps; zero coefficients are never stored.
template <class R>
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const R& c) { set(0, c); }  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
    static LaurentPoly monomial(const R& c, int exp) {
        LaurentPoly p;
        p.set(exp, c);
        return p;
    }
    static LaurentPoly eps(int exp) { return monomial(R(1), exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, R>& terms() const { return terms_; }
    R coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? R() : it->second;
    }
    // Lowest exponent with a nonzero coefficient.
    std::optional<int> order() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [e1, c1] : a.terms_)
            for (auto& [e2, c2] : b.terms_) r.add(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (e != 0) out += "*eps^" + std::to_string(e);
        }
        return out;
    }

private:
    void set(int e, const R& c) {
        if (c.is_zero()) terms_.erase(e);
        else terms_[e] = c;
    }
    void add(int e, const R& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, R> terms_;
};

// Value at eps = 0; throws PoleError when a negative power survives.
template <class R>
R laurent_limit(const LaurentPoly<R>& f) {
    auto ord = f.order();
    if (!ord) return R();
    if (*ord < 0) throw PoleError(-*ord);
    return f.coeff(0);
}

}  // namespace ptns
