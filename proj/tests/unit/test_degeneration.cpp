#include <doctest.h>

#include "pencil_tns/degeneration.hpp"
#include "pencil_tns/error.hpp"

using namespace ptns;

namespace {

std::uint64_t prime_two_mod_three() {
    for (std::uint64_t p = (1ULL << 30) + 1;; p += 2) {
        if (p % 3 != 2) continue;
        try {
            Fp::check_modulus(p);
            return p;
        } catch (const Error&) {
        }
    }
}

Fp power(Fp b, std::uint64_t e) {
    Fp r = Fp::from_signed(1, b.modulus());
    for (; e; e >>= 1, b *= b)
        if (e & 1) r *= b;
    return r;
}

}  // namespace

TEST_CASE("named tensors") {
    CHECK(tensor_iii2().entries().size() == 27);
    auto t = tensor_ii2<Rational>(Rational(5));
    CHECK(t.at({0, 2, 1}) == Rational(1));
    CHECK(t.at({1, 2, 0}) == Rational(5));
    CHECK(t.at({2, 1, 0}).is_zero());
    int nz = 0;
    auto iv2 = tensor_iv2();
    for (auto& x : iv2.entries()) nz += x.is_zero() ? 0 : 1;
    CHECK(nz == 12);
}

TEST_CASE("epsilon degenerations reach their targets") {
    for (const char* name : {"iii2", "iv2", "zero2"}) {
        auto t = verify_named_degeneration(name);
        CHECK_MESSAGE(t.verified, name);
        CHECK(t.poles.empty());
        CHECK(t.mismatches.empty());
    }
    CHECK_THROWS_AS(verify_named_degeneration("ii1"), InputError);
}

TEST_CASE("unscaled fourth-order curve") {
    auto curve = curve_iv2();
    curve.scale = Laurent(Rational(1));
    auto t = verify_epsilon_degeneration(curve);
    CHECK(t.leading_order == 4);
    CHECK_FALSE(t.verified);
    auto target = tensor_iv2();
    for (std::size_t off = 0; off < target.size(); ++off)
        CHECK(t.image.entries()[off].coeff(4) == target.entries()[off] * Rational(8, 3));
}

TEST_CASE("poles are reported with their order") {
    auto curve = curve_iii2();
    curve.scale = Laurent::monomial(Rational(1), -1);
    auto t = verify_epsilon_degeneration(curve);
    CHECK_FALSE(t.verified);
    REQUIRE(t.poles.size() == 6);
    for (auto& p : t.poles) CHECK(p.order == 1);
}

TEST_CASE("intermediate tensor of the nullcone case") {
    CHECK(zero2_intermediate() == zero2_intermediate_expected());
    auto h = zero2_coordinate_change();
    for (auto& m : h) CHECK_FALSE(det(m).is_zero());
}

TEST_CASE("restriction of the triangle graph tensor") {
    auto zero = verify_restriction(Rational(0));
    CHECK(zero.verified);
    REQUIRE(zero.mu);
    CHECK(*zero.mu == Rational(1));

    auto two = verify_restriction(Rational(2));
    CHECK(two.verified);
    CHECK_FALSE(two.mu);
    CHECK(two.cube == Rational(9));

    CHECK(verify_restriction(Rational(1, 2)).verified);
    CHECK(verify_restriction(Rational(-3)).verified);
    CHECK(rational_cube_root(Rational(-27, 8)) == Rational(-3, 2));
    CHECK_THROWS_AS(verify_restriction(Rational(-1)), Error);
}

TEST_CASE("restriction over a finite field with a cube root of nine") {
    std::uint64_t p = prime_two_mod_three();
    auto f = [p](long v) { return Fp::from_signed(v, p); };
    Fp lam = f(2), mu = power(f(9), (2 * p - 1) / 3);
    REQUIRE(mu * mu * mu == f(9));
    Fp inv = mu.inverse();

    // images of v_{ij} in each factor, copied from the explicit table
    auto image = [&](int factor, int i, int j) {
        std::array<Fp, 3> v{f(0), f(0), f(0)};
        const int idx = 2 * i + j;
        const std::array<std::array<int, 4>, 3> where{{{0, 1, 2, 0}, {2, 0, 1, 2}, {1, 2, 0, 1}}};
        const std::array<Fp, 4> w{inv, mu, f(1), inv * lam};
        v[static_cast<std::size_t>(where[static_cast<std::size_t>(factor)][static_cast<std::size_t>(idx)])] =
            w[static_cast<std::size_t>(idx)];
        return v;
    };
    Tensor<Fp> sum({3, 3, 3}, f(0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                auto x = image(0, i, j), y = image(1, j, k), z = image(2, k, i);
                for (std::size_t a = 0; a < 3; ++a)
                    for (std::size_t b = 0; b < 3; ++b)
                        for (std::size_t c = 0; c < 3; ++c) sum.at({a, b, c}) += x[a] * y[b] * z[c];
            }
    CHECK(sum == tensor_ii2<Fp>(lam));
}
