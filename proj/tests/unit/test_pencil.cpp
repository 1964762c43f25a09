#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "pencil_tns/error.hpp"
#include "pencil_tns/pencil.hpp"
#include "pencil_tns/rng.hpp"

using namespace ptns;

namespace {

Matrix<Rational> mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    Matrix<Rational> m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("canonical blocks") {
    auto l1 = left_block(1);
    CHECK(l1.A == mat({{1, 0}}));
    CHECK(l1.B == mat({{0, 1}}));
    auto j2 = jordan_block(2, Rational(1), Rational(1));
    CHECK(j2.A == mat({{1, 0}, {0, 1}}));
    CHECK(j2.B == mat({{1, 1}, {0, 1}}));
    auto r2 = right_block(2);
    CHECK(r2.rows() == 3);
    CHECK(r2.cols() == 2);
    CHECK(box_times_identity(j2, 2).rows() == 4);
    CHECK_THROWS_AS(box_times_identity(j2, 0), InputError);
}

TEST_CASE("decomposition of small examples") {
    auto k = kronecker_decompose(left_block(1));
    CHECK(k.left_indices == std::vector<int>{1});
    CHECK(k.jordan.empty());

    auto j = kronecker_decompose(jordan_block(1, Rational(1), Rational(2)));
    REQUIRE(j.jordan.size() == 1);
    CHECK(j.jordan[0].certificate == BinaryForm::linear(1, 2));
    CHECK(j.jordan[0].sizes == std::vector<int>{1});

    auto m = kronecker_decompose(block_sum(jordan_block(2, Rational(1), Rational(0)), left_block(0)));
    CHECK(m.left_indices == std::vector<int>{0});
    REQUIRE(m.jordan.size() == 1);
    CHECK(m.jordan[0].certificate == BinaryForm::linear(1, 0));
    CHECK(m.jordan[0].sizes == std::vector<int>{2});

    auto z = kronecker_decompose(MatrixPencil(Matrix<Rational>(2, 3), Matrix<Rational>(2, 3)));
    CHECK(z.left_indices == std::vector<int>{0, 0, 0});
    CHECK(z.right_indices == std::vector<int>{0, 0});
    CHECK(z.jordan.empty());
}

TEST_CASE("eigenvalues with equal multiplicity but different structure are separated") {
    // J2(v0+v1) + J1(v0-v1) + J1(v0-v1): det has both roots squared.
    auto p = assemble({{BlockKind::jordan, 2, Rational(1), Rational(1)},
                       {BlockKind::jordan, 1, Rational(1), Rational(-1)},
                       {BlockKind::jordan, 1, Rational(1), Rational(-1)}});
    auto k = kronecker_decompose(p);
    REQUIRE(k.jordan.size() == 2);
    CHECK(k.jordan[0].sizes == std::vector<int>{2});
    CHECK(k.jordan[0].certificate == BinaryForm::linear(1, 1));
    CHECK(k.jordan[1].sizes == std::vector<int>{1, 1});
}

TEST_CASE("round trip through random conjugation") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        auto blocks = oracle::random_blocks(rng, 6);
        if (blocks.empty()) continue;
        auto p = assemble(blocks);
        auto q = conjugate(p, random_invertible(p.rows(), rng), random_invertible(p.cols(), rng));
        auto k = kronecker_decompose(q);
        CHECK(same_invariants(k, oracle::expected_form(blocks)));
        CHECK(k.accounted_rows() == q.rows());
        CHECK(k.accounted_cols() == q.cols());
    }
}

TEST_CASE("determinantal divisors agree with the gcd of all minors") {
    Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        auto blocks = oracle::random_blocks(rng, 4);
        if (blocks.empty()) continue;
        auto p = assemble(blocks);
        auto q = conjugate(p, random_invertible(p.rows(), rng, -2, 2), random_invertible(p.cols(), rng, -2, 2));
        auto d = determinantal_divisors(q);
        for (std::size_t k = 1; k <= d.size(); ++k) CHECK(oracle::minor_gcd(q, k) == d[k - 1]);
        if (d.size() < std::min(q.rows(), q.cols()))
            CHECK(oracle::minor_gcd(q, d.size() + 1).is_zero());
    }
}

TEST_CASE("determinant of a square pencil") {
    auto p = assemble({{BlockKind::jordan, 2, Rational(1), Rational(3)}, {BlockKind::jordan, 1, Rational(0), Rational(1)}});
    BinaryForm expect = pow(BinaryForm::linear(1, 3), 2) * BinaryForm::linear(0, 1);
    CHECK(pencil_determinant(p) == expect);
}

TEST_CASE("generic structure law") {
    auto k = generic_structure(2, 3);
    CHECK(k.left_indices == std::vector<int>{2});
    auto s = generic_structure(4, 4);
    REQUIRE(s.jordan.size() == 1);
    CHECK(s.jordan[0].symbolic);
    CHECK(s.jordan[0].eigen_count == 4);
    CHECK(generic_structure(3, 5).left_indices == std::vector<int>{1, 2});
    CHECK(generic_structure(5, 3).right_indices == std::vector<int>{1, 2});
    CHECK_THROWS_WITH_AS(generic_structure(2, 5), "no concise tensors: need n1 <= 2 n2 and n2 <= 2 n1", Error);
    Rng rng(8);
    auto random = MatrixPencil::from_tensor(random_tensor({2, 2, 3}, rng));
    CHECK(same_structure(kronecker_decompose(random), k));
}

TEST_CASE("orbit closure invariants count padding") {
    // B = J1(z1) + J1(z2) + generic 1x1 inside a 4x4 ambient: one R_0 and one L_0.
    auto b = assemble({{BlockKind::jordan, 1, Rational(1), Rational(1)},
                       {BlockKind::jordan, 1, Rational(1), Rational(2)},
                       {BlockKind::jordan, 1, Rational(1), Rational(5)}});
    auto inv = orbit_closure_invariants(b, 4, 4);
    CHECK(inv.right[0] == 1);
    CHECK(inv.left[0] == 1);
    CHECK(inv.left_total == 1);
    CHECK(inv.right_total == 1);
}

TEST_CASE("size-one block condition") {
    auto z = [](long t) { return BlockSpec{BlockKind::jordan, 1, Rational(1), Rational(t)}; };
    // A = (J1(z1) + J1(z2)) boxed with I_2; B keeps one copy of each.
    auto a = kronecker_decompose(box_times_identity(assemble({z(1), z(2)}), 2));
    auto b = kronecker_decompose(assemble({z(1), z(2), z(5)}));
    CHECK(size_one_block_check(a, b, 1).holds);
    auto a3 = kronecker_decompose(box_times_identity(assemble({z(1), z(2)}), 3));
    auto check = size_one_block_check(a3, b, 1);
    CHECK_FALSE(check.holds);
    REQUIRE(check.violations.size() == 1);
    CHECK(check.violations[0].certificate.degree() == 2);
    CHECK(size_one_block_check(a, a, 0).holds);
    CHECK_THROWS_AS(size_one_block_check(kronecker_decompose(left_block(1)), b, 1), Error);
}
