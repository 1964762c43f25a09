#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ptns {

class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p/q", "p" or a decimal integer; throws InputError otherwise.
    static Rational parse(std::string_view text);

    std::string str() const;
    const mpq_class& gmp() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

// Element of F_p. Elements built without a modulus (Fp(), Fp(1), Fp(-1)) are "unbound"
// small integers that adopt the modulus of whatever they are combined with, so generic
// code can use S{} and S(1).
class Fp {
public:
    static constexpr std::uint64_t kDefaultModulus = 2147483647ULL;

    Fp() = default;
    Fp(long v) : v_(static_cast<std::uint64_t>(v)) {}  // NOLINT(google-explicit-constructor)
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}
    static Fp from_signed(long long value, std::uint64_t modulus);
    static Fp from_rational(const Rational& q, std::uint64_t modulus);

    // Throws unless p is prime and 2^30 < p < 2^62.
    static void check_modulus(std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }
    Fp inverse() const;
    std::string str() const;

    Fp& operator+=(Fp o);
    Fp& operator-=(Fp o);
    Fp& operator*=(Fp o);
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return Fp() - *this; }

    friend bool operator==(Fp a, Fp b);

private:
    // Brings both operands to a common modulus; returns it (0 if both unbound).
    static std::uint64_t unify(Fp& a, Fp& b);
    void adopt(std::uint64_t p);

    std::uint64_t v_ = 0;  // two's complement small integer while unbound
    std::uint64_t p_ = 0;
};

}  // namespace ptns
