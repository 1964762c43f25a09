#pragma once

#include <string>
#include <vector>

#include "pencil_tns/rational.hpp"

namespace ptns {

// Element of Q[mu]/(mu^k - c), stored as a representative of degree < k.
// Default construction gives an unbound zero that adopts the ring of its partner.
class QuotientRing {
public:
    QuotientRing() = default;
    QuotientRing(long v) : QuotientRing(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    QuotientRing(const Rational& v) : rep_{v} {}           // NOLINT(google-explicit-constructor)
    static QuotientRing constant(int k, const Rational& c, const Rational& v);
    static QuotientRing generator(int k, const Rational& c);

    int k() const { return k_; }
    const Rational& relation() const { return c_; }
    const std::vector<Rational>& rep() const { return rep_; }
    bool is_zero() const;
    QuotientRing inverse() const;

    QuotientRing& operator+=(const QuotientRing& o);
    QuotientRing& operator-=(const QuotientRing& o);
    friend QuotientRing operator+(QuotientRing a, const QuotientRing& b) { return a += b; }
    friend QuotientRing operator-(QuotientRing a, const QuotientRing& b) { return a -= b; }
    friend QuotientRing operator*(const QuotientRing& a, const QuotientRing& b);
    QuotientRing& operator*=(const QuotientRing& o) { return *this = *this * o; }
    friend QuotientRing operator/(const QuotientRing& a, const QuotientRing& b) { return a * b.inverse(); }
    QuotientRing operator-() const;
    friend bool operator==(const QuotientRing& a, const QuotientRing& b);

    std::string str() const;

private:
    // Bare rationals (k_ == 0) behave as constants of any ring.
    void bind(const QuotientRing& o);
    Rational at(size_t i) const { return i < rep_.size() ? rep_[i] : Rational(); }

    int k_ = 0;
    Rational c_;
    std::vector<Rational> rep_;
};

}  // namespace ptns
