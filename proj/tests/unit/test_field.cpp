#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "pencil_tns/binary_form.hpp"
#include "pencil_tns/error.hpp"
#include "pencil_tns/laurent.hpp"
#include "pencil_tns/quotient_ring.hpp"
#include "pencil_tns/rational.hpp"
#include "pencil_tns/rng.hpp"

using namespace ptns;

TEST_CASE("rationals normalize eagerly") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
}

TEST_CASE("prime field arithmetic") {
    const std::uint64_t p = Fp::kDefaultModulus;
    Fp a(123456789, p), b = Fp::from_signed(-5, p);
    CHECK((a * a.inverse()) == Fp(1, p));
    CHECK((b + Fp(5, p)).is_zero());
    CHECK(Fp::from_rational(Rational(1, 2), p) * Fp(2, p) == Fp(1, p));
    // unbound constants adopt the modulus of their partner
    CHECK((Fp(1) * a) == a);
    CHECK((Fp() - Fp(1)) + Fp(1, p) == Fp(0, p));
    CHECK_NOTHROW(Fp::check_modulus(p));
    CHECK_THROWS(Fp::check_modulus(2147483649ULL));
    CHECK_THROWS(Fp::check_modulus(101));
}

TEST_CASE("squarefree decomposition of binary forms") {
    BinaryForm l1 = BinaryForm::linear(1, 2), l2 = BinaryForm::linear(1, -1);
    auto prof = squarefree_decompose(pow(l1, 3) * l2);
    CHECK(prof.partition == std::vector<int>{3, 1});
    REQUIRE(prof.factors.size() == 2);
    CHECK(prof.factors[1].form == l1);
    CHECK(prof.factors[1].multiplicity == 3);

    // root at (1:0) tracked through the v1 power
    BinaryForm v1 = BinaryForm::linear(0, 1);
    auto inf = squarefree_decompose(pow(v1, 2) * BinaryForm::linear(1, 1) * Rational(7));
    CHECK(inf.partition == std::vector<int>{2, 1});
    CHECK(inf.content == Rational(7));

    CHECK_THROWS_WITH_AS(squarefree_decompose(BinaryForm::zero(3)), "zero-form", Error);
}

TEST_CASE("squarefree decomposition matches construction") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int roots = static_cast<int>(rng.uniform(1, 4));
        BinaryForm f = BinaryForm::constant(rng.uniform_rational(1, 9));
        std::map<std::vector<Rational>, int> mult;
        for (int r = 0; r < roots; ++r) {
            BinaryForm l = rng.uniform(0, 5) == 0 ? BinaryForm::linear(0, 1)
                                                   : BinaryForm::linear(1, rng.uniform_rational(-6, 6));
            int e = static_cast<int>(rng.uniform(1, 3));
            mult[l.coeffs()] += e;
            f = f * pow(l, e);
        }
        std::vector<int> expected;
        for (auto& [k, e] : mult) expected.push_back(e);
        std::sort(expected.rbegin(), expected.rend());

        auto prof = squarefree_decompose(f);
        CHECK(prof.partition == expected);
        BinaryForm rebuilt = BinaryForm::constant(prof.content);
        for (auto& fac : prof.factors) rebuilt = rebuilt * pow(fac.form, fac.multiplicity);
        CHECK(rebuilt == f);
    }
}

TEST_CASE("gcd of binary forms contains every planted common factor") {
    Rng rng(11);
    auto random_form = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(rng.uniform_rational(-5, 5));
        if (c[0].is_zero() && c[static_cast<size_t>(d)].is_zero()) c[0] = Rational(1);
        return BinaryForm(d, c);
    };
    for (int trial = 0; trial < 40; ++trial) {
        BinaryForm h = random_form(static_cast<int>(rng.uniform(0, 3)));
        if (h.is_zero()) continue;
        BinaryForm f = h * random_form(2), g = h * random_form(3);
        if (f.is_zero() || g.is_zero()) continue;
        BinaryForm d = gcd(f, g);
        CHECK(divides(h, d));
        CHECK(divides(d, f));
        CHECK(divides(d, g));
    }
}

TEST_CASE("merge coarsening agrees with set-partition enumeration") {
    CHECK(merge_coarsening({3}, {2, 1}));
    CHECK_FALSE(merge_coarsening({2, 2}, {3, 1}));
    CHECK_THROWS_AS(merge_coarsening({3}, {2, 2}), Error);
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> lambda;
        int n = static_cast<int>(rng.uniform(1, 8));
        for (int i = 0; i < n; ++i) lambda.push_back(static_cast<int>(rng.uniform(1, 3)));
        int total = 0;
        for (int x : lambda) total += x;
        std::vector<int> mu;
        for (int left = total; left > 0;) {
            int part = static_cast<int>(rng.uniform(1, std::min(left, 6)));
            mu.push_back(part);
            left -= part;
        }
        CHECK(merge_coarsening(mu, lambda) == oracle::coarsens_by_enumeration(mu, lambda));
    }
}

TEST_CASE("laurent limits and poles") {
    using L = LaurentPoly<Rational>;
    L f = L::eps(-1) * L(Rational(3)) + L(Rational(2));
    CHECK_THROWS_AS(laurent_limit(f), PoleError);
    try {
        laurent_limit(f * L::eps(-1));
    } catch (const PoleError& e) {
        CHECK(e.order() == 2);
        CHECK(e.code() == "pole-at-zero");
    }
    CHECK(laurent_limit(f * L::eps(1)) == Rational(3));
    CHECK((f - f).is_zero());
    CHECK((L::eps(2) * L::eps(-2)) == L(Rational(1)));
}

TEST_CASE("quotient ring arithmetic") {
    QuotientRing mu = QuotientRing::generator(3, Rational(9));
    CHECK((mu * mu * mu) == QuotientRing::constant(3, Rational(9), Rational(9)));
    CHECK((mu * mu.inverse()) == QuotientRing(1));
    CHECK(mu.inverse() == mu * mu * QuotientRing(Rational(1, 9)));
    QuotientRing x = mu * QuotientRing(2) + QuotientRing(3) - mu * mu;
    CHECK((x * x.inverse()) == QuotientRing(1));
    // mu^3 = 1 is not a field: mu - 1 is a zero divisor
    QuotientRing nu = QuotientRing::generator(3, Rational(1));
    CHECK_THROWS((nu - QuotientRing(1)).inverse());
}
