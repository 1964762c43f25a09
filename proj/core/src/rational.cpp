#include "pencil_tns/rational.hpp"

#include <cctype>

#include "pencil_tns/error.hpp"

namespace ptns {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw InputError("not a rational: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("division-by-zero");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    mpz_class n = parse_integer(text.substr(0, slash));
    mpz_class d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return v_.get_str(10); }

Rational Rational::inverse() const {
    if (is_zero()) throw Error("division-by-zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division-by-zero");
    v_ /= o.v_;
    return *this;
}

// ---- Fp ----

Fp Fp::from_signed(long long value, std::uint64_t modulus) {
    long long r = value % static_cast<long long>(modulus);
    if (r < 0) r += static_cast<long long>(modulus);
    return Fp(static_cast<std::uint64_t>(r), modulus);
}

Fp Fp::from_rational(const Rational& q, std::uint64_t modulus) {
    mpz_class p(std::to_string(modulus));
    mpz_class n = q.num() % p;
    mpz_class d = q.den() % p;
    if (n < 0) n += p;
    if (d == 0) throw Error("bad-reduction", "denominator divisible by modulus");
    Fp num(std::stoull(n.get_str()), modulus);
    Fp den(std::stoull(d.get_str()), modulus);
    return num / den;
}

void Fp::check_modulus(std::uint64_t p) {
    if (p <= (1ULL << 30) || p >= (1ULL << 62))
        throw InputError("modulus must lie in (2^30, 2^62)");
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) throw InputError("modulus is not prime");
}

std::string Fp::str() const {
    return p_ == 0 ? std::to_string(static_cast<long long>(v_)) : std::to_string(v_);
}

void Fp::adopt(std::uint64_t p) {
    *this = from_signed(static_cast<long long>(v_), p);
}

std::uint64_t Fp::unify(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0) a.adopt(b.p_);
    else if (b.p_ == 0) b.adopt(a.p_);
    else throw Error("modulus-mismatch");
    return a.p_;
}

Fp& Fp::operator+=(Fp o) {
    std::uint64_t p = unify(*this, o);
    if (p == 0) v_ += o.v_;
    else {
        v_ += o.v_;
        if (v_ >= p) v_ -= p;
    }
    return *this;
}

Fp& Fp::operator-=(Fp o) {
    std::uint64_t p = unify(*this, o);
    if (p == 0) v_ -= o.v_;
    else v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
    return *this;
}

Fp& Fp::operator*=(Fp o) {
    std::uint64_t p = unify(*this, o);
    if (p == 0) v_ = static_cast<std::uint64_t>(static_cast<long long>(v_) * static_cast<long long>(o.v_));
    else v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p);
    return *this;
}

bool operator==(Fp a, Fp b) {
    Fp::unify(a, b);
    return a.v_ == b.v_;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw Error("division-by-zero");
    if (p_ == 0) {
        long long v = static_cast<long long>(v_);
        if (v == 1 || v == -1) return *this;
        throw Error("unbound-inverse", "inverse of an element without modulus");
    }
    // Fermat: a^(p-2).
    Fp base = *this, acc(1, p_);
    for (std::uint64_t e = p_ - 2; e; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

}  // namespace ptns
