#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pencil_tns/cubic.hpp"
#include "pencil_tns/pencil.hpp"
#include "pencil_tns/triangle.hpp"

namespace ptns {

// ((m12 - kappa)^m, 1^((m-1) kappa)) for m = m01 of the canonical config.
std::vector<int> lambda_partition(const TriangleConfig& cfg, std::size_t kappa);

struct ProjectionAttempt {
    std::vector<int> profile;  // root multiplicities of the projected determinant
    bool coarsens = false;
};

struct ProfileVerdict {
    bool member = false;  // necessary condition only
    std::size_t size = 0;
    std::vector<int> lambda;
    std::vector<ProjectionAttempt> attempts;
    std::size_t degenerate_draws = 0;
};

// Projects to n' x n' with n' = m*m12 - kappa and tests whether the determinant's multiplicity
// profile is a merge of lambda(kappa). A negative verdict needs three independent projections.
// Throws Error("degenerate projection, resample") when every draw has zero determinant.
ProfileVerdict determinant_profile_test(const MatrixPencil& p, const TriangleConfig& cfg, std::size_t kappa,
                                        std::uint64_t seed);

struct RankDropResult {
    bool infinite = false;
    std::size_t count = 0;  // distinct points where the rank is <= r
    BinaryForm divisor;     // gcd of the (r+1)-minors
    std::vector<int> profile;
    std::vector<SquarefreeFactor> factors;
};

// Throws Error("vacuous") when r >= min(n1, n2).
RankDropResult rank_drop_points(const MatrixPencil& p, std::size_t r);

struct RankDropPoint {
    BinaryForm certificate;
    int eigen_count = 0;
    int drop = 0;          // normal rank minus rank at each eigenvalue of the certificate
    int jordan_blocks = 0; // from the Kronecker decomposition
    bool verified = false;
};

// Points where the rank is <= r, with the rank drop certified as a Jordan block count.
// Throws Error("not-concise") unless the pencil is concise.
std::vector<RankDropPoint> jordan_count_at_rank_drop(const MatrixPencil& p, std::size_t r);

struct CubicTestResult {
    bool pass = false;
    std::array<TernaryForm, 3> cubics;
    std::array<int, 3> ranks{};  // -1 for an identically zero cubic
};

// All three determinantal cubics are reducible (or vanish identically).
CubicTestResult determinantal_cubics_test(const Tensor<Rational>& t);

// Columns of the linear system X -> sum over acting slots of X_s . t, one per elementary matrix.
Matrix<Rational> annihilator_system(const Tensor<Rational>& t, const std::vector<std::size_t>& acting);
std::size_t annihilator_dim(const Tensor<Rational>& t, const std::vector<std::size_t>& acting);

enum class BlockMode { pencil, three_factor };

struct BlockAnnihilatorReport {
    std::size_t total = 0;   // ann of the block sum
    std::size_t first = 0;   // ann of the first block
    std::size_t second = 0;  // ann of the second block
    std::size_t m1 = 0;      // off-diagonal kernels, pencil mode only
    std::size_t m2 = 0;
    bool contained = false;  // ann(sum) lies in the block-wise bound
    bool equal = false;
};

// Pencil mode: blocks share slot 0 and the Lie algebra acts on slots 1 and 2.
// Three-factor mode: blocks are summed in every slot and all slots act.
// Throws Error("not-concise") if a block is not concise on its own factors.
BlockAnnihilatorReport block_annihilator_check(const Tensor<Rational>& t1, const Tensor<Rational>& t2, BlockMode mode);

// F[(u2, v2)][(u1, v1)] = sum_a S[a][u1][u2] T[a][v1][v2] for a random S of shape (2, 4q, 3q).
Matrix<Rational> bridge_matrix(const Tensor<Rational>& s, const Tensor<Rational>& t);
std::size_t bridge_map_rank(const Tensor<Rational>& t, std::size_t q, std::uint64_t seed);

}  // namespace ptns
