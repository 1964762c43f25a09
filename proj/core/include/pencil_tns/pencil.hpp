#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "pencil_tns/binary_form.hpp"
#include "pencil_tns/matrix.hpp"
#include "pencil_tns/poly.hpp"
#include "pencil_tns/tensor.hpp"

namespace ptns {

// The pencil v0*A + v1*B, i.e. a tensor of shape (2, n1, n2).
struct MatrixPencil {
    Matrix<Rational> A, B;

    MatrixPencil() = default;
    MatrixPencil(Matrix<Rational> a, Matrix<Rational> b);
    static MatrixPencil from_tensor(const Tensor<Rational>& t);
    Tensor<Rational> to_tensor() const;

    std::size_t rows() const { return A.rows(); }
    std::size_t cols() const { return A.cols(); }
    Matrix<Rational> at(const Rational& v0, const Rational& v1) const;
    MatrixPencil transpose() const { return {A.transpose(), B.transpose()}; }
    MatrixPencil submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    friend bool operator==(const MatrixPencil& a, const MatrixPencil& b) { return a.A == b.A && a.B == b.B; }
};

// p x (p+1): A = [I | 0], B = [0 | I].
MatrixPencil left_block(int p);
// (p+1) x p: A = [I ; 0], B = [0 ; I].
MatrixPencil right_block(int p);
// p x p with diagonal z0*v0 + z1*v1 and ones on the superdiagonal of B
// (of A when z0 = 0, since z and the superdiagonal form must be independent).
MatrixPencil jordan_block(int p, const Rational& z0, const Rational& z1);
MatrixPencil block_sum(const MatrixPencil& a, const MatrixPencil& b);
// A (x) I_q, B (x) I_q.
MatrixPencil box_times_identity(const MatrixPencil& p, int q);
// (L A R, L B R).
MatrixPencil conjugate(const MatrixPencil& p, const Matrix<Rational>& left, const Matrix<Rational>& right);

enum class BlockKind { left, right, jordan };

struct BlockSpec {
    BlockKind kind;
    int size;
    Rational z0, z1;  // eigenvalue linear form, jordan blocks only
};

MatrixPencil assemble(const std::vector<BlockSpec>& blocks);

// Eigenvalues sharing one list of Jordan block sizes. `certificate` is the normalized
// squarefree binary form vanishing exactly at those eigenvalues; a linear certificate
// z0*v0 + z1*v1 is the rational eigenvalue (z0:z1).
struct JordanGroup {
    BinaryForm certificate;
    bool symbolic = false;  // eigenvalues left unnamed (generic square structure)
    int eigen_count = 0;
    std::vector<int> sizes;  // decreasing
};

struct KroneckerForm {
    std::size_t rows = 0, cols = 0;
    std::size_t normal_rank = 0;
    std::vector<int> left_indices;   // L_p blocks, increasing
    std::vector<int> right_indices;  // R_p blocks, increasing
    std::vector<JordanGroup> jordan;

    std::size_t accounted_rows() const;
    std::size_t accounted_cols() const;
};

// Same minimal indices and the same (certificate, sizes) groups.
bool same_invariants(const KroneckerForm& a, const KroneckerForm& b);
// Same minimal indices and the same multiset of per-eigenvalue size lists.
bool same_structure(const KroneckerForm& a, const KroneckerForm& b);

std::size_t normal_rank(const MatrixPencil& p);
KroneckerForm kronecker_decompose(const MatrixPencil& p);
KroneckerForm generic_structure(std::size_t n1, std::size_t n2);

// Homogeneous invariant factors i_1 | ... | i_r (r = normal rank), normalized.
std::vector<BinaryForm> invariant_factors(const MatrixPencil& p);
// d_k = gcd of all k x k minors, k = 1..normal rank.
std::vector<BinaryForm> determinantal_divisors(const MatrixPencil& p);
// det(v0 A + v1 B) for square pencils.
BinaryForm pencil_determinant(const MatrixPencil& p);

// Nonzero invariant factors of a polynomial matrix over Q[x], monic.
std::vector<Poly> smith_invariant_factors(Matrix<Poly> m);

struct JordanCount {
    BinaryForm certificate;
    int size;
    int count;  // blocks of this size at each eigenvalue of the certificate
};

struct OrbitInvariants {
    std::map<int, int> left;   // index -> number of L blocks
    std::map<int, int> right;  // index -> number of R blocks
    int left_total = 0, right_total = 0;
    std::vector<JordanCount> jordan;
};

// Kronecker counts after padding to (N1, N2) with R_0 and L_0 blocks.
OrbitInvariants orbit_closure_invariants(const MatrixPencil& p, std::size_t N1, std::size_t N2);

struct SizeOneViolation {
    BinaryForm certificate;
    int from_count;
    int to_count;
};

struct SizeOneCheck {
    bool holds = true;
    std::vector<SizeOneViolation> violations;
};

// Necessary condition for `from` to degenerate to `to`: at every eigenvalue of `from`,
// #J_1 blocks(from) <= k1 + #J_1 blocks(to). `from` must be regular.
SizeOneCheck size_one_block_check(const KroneckerForm& from, const KroneckerForm& to, int k1);

}  // namespace ptns
