#include "pencil_tns/pencil.hpp"

#include <algorithm>

namespace ptns {

MatrixPencil::MatrixPencil(Matrix<Rational> a, Matrix<Rational> b) : A(std::move(a)), B(std::move(b)) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw InputError("pencil matrices differ in shape");
}

MatrixPencil MatrixPencil::from_tensor(const Tensor<Rational>& t) {
    if (t.order() != 3 || t.dim(0) != 2) throw InputError("pencil tensor must have shape (2, n1, n2)");
    std::size_t n1 = t.dim(1), n2 = t.dim(2);
    Matrix<Rational> a(n1, n2), b(n1, n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            a(i, j) = t.entries()[i * n2 + j];
            b(i, j) = t.entries()[n1 * n2 + i * n2 + j];
        }
    return {a, b};
}

Tensor<Rational> MatrixPencil::to_tensor() const {
    std::vector<Rational> e = A.data();
    e.insert(e.end(), B.data().begin(), B.data().end());
    return Tensor<Rational>({2, rows(), cols()}, std::move(e));
}

Matrix<Rational> MatrixPencil::at(const Rational& v0, const Rational& v1) const {
    return A * v0 + B * v1;
}

MatrixPencil MatrixPencil::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix<Rational> a(rs.size(), cs.size()), b(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) {
            a(i, j) = A(rs[i], cs[j]);
            b(i, j) = B(rs[i], cs[j]);
        }
    return {a, b};
}

MatrixPencil left_block(int p) {
    if (p < 0) throw InputError("block size must be nonnegative");
    auto n = static_cast<std::size_t>(p);
    Matrix<Rational> a(n, n + 1), b(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Rational(1);
        b(i, i + 1) = Rational(1);
    }
    return {a, b};
}

MatrixPencil right_block(int p) { return left_block(p).transpose(); }

MatrixPencil jordan_block(int p, const Rational& z0, const Rational& z1) {
    if (p < 1) throw InputError("Jordan block size must be positive");
    if (z0.is_zero() && z1.is_zero()) throw InputError("eigenvalue form must be nonzero");
    auto n = static_cast<std::size_t>(p);
    Matrix<Rational> a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = z0;
        b(i, i) = z1;
        if (i + 1 < n) (z0.is_zero() ? a : b)(i, i + 1) = Rational(1);
    }
    return {a, b};
}

MatrixPencil block_sum(const MatrixPencil& x, const MatrixPencil& y) {
    return {block_diag(x.A, y.A), block_diag(x.B, y.B)};
}

MatrixPencil box_times_identity(const MatrixPencil& p, int q) {
    if (q <= 0) throw InputError("identity size must be positive");
    auto id = Matrix<Rational>::identity(static_cast<std::size_t>(q));
    return {kron(p.A, id), kron(p.B, id)};
}

MatrixPencil conjugate(const MatrixPencil& p, const Matrix<Rational>& left, const Matrix<Rational>& right) {
    return {left * p.A * right, left * p.B * right};
}

MatrixPencil assemble(const std::vector<BlockSpec>& blocks) {
    MatrixPencil acc;
    for (const auto& b : blocks) {
        switch (b.kind) {
            case BlockKind::left: acc = block_sum(acc, left_block(b.size)); break;
            case BlockKind::right: acc = block_sum(acc, right_block(b.size)); break;
            case BlockKind::jordan: acc = block_sum(acc, jordan_block(b.size, b.z0, b.z1)); break;
        }
    }
    return acc;
}

std::size_t KroneckerForm::accounted_rows() const {
    std::size_t n = 0;
    for (int p : left_indices) n += static_cast<std::size_t>(p);
    for (int p : right_indices) n += static_cast<std::size_t>(p) + 1;
    for (const auto& g : jordan)
        for (int s : g.sizes) n += static_cast<std::size_t>(s) * static_cast<std::size_t>(g.eigen_count);
    return n;
}

std::size_t KroneckerForm::accounted_cols() const {
    std::size_t n = 0;
    for (int p : left_indices) n += static_cast<std::size_t>(p) + 1;
    for (int p : right_indices) n += static_cast<std::size_t>(p);
    for (const auto& g : jordan)
        for (int s : g.sizes) n += static_cast<std::size_t>(s) * static_cast<std::size_t>(g.eigen_count);
    return n;
}

namespace {

struct GroupKey {
    std::vector<int> sizes;
    bool symbolic;
    int eigen_count;
    std::vector<Rational> cert;
    auto operator<=>(const GroupKey&) const = default;
};

std::vector<GroupKey> group_keys(const KroneckerForm& k) {
    std::vector<GroupKey> out;
    for (const auto& g : k.jordan)
        out.push_back({g.sizes, g.symbolic, g.eigen_count,
                       g.symbolic ? std::vector<Rational>{} : g.certificate.normalized().coeffs()});
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::vector<int>, int> size_lists(const KroneckerForm& k) {
    std::map<std::vector<int>, int> out;
    for (const auto& g : k.jordan) out[g.sizes] += g.eigen_count;
    return out;
}

bool same_minimal_indices(const KroneckerForm& a, const KroneckerForm& b) {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return a.rows == b.rows && a.cols == b.cols && sorted(a.left_indices) == sorted(b.left_indices) &&
           sorted(a.right_indices) == sorted(b.right_indices);
}

}  // namespace

bool same_invariants(const KroneckerForm& a, const KroneckerForm& b) {
    return same_minimal_indices(a, b) && group_keys(a) == group_keys(b);
}

bool same_structure(const KroneckerForm& a, const KroneckerForm& b) {
    return same_minimal_indices(a, b) && size_lists(a) == size_lists(b);
}

KroneckerForm generic_structure(std::size_t n1, std::size_t n2) {
    if (n1 == 0 || n2 == 0) throw InputError("dimensions must be positive");
    if (n1 > 2 * n2 || n2 > 2 * n1) throw Error("no concise tensors", "need n1 <= 2 n2 and n2 <= 2 n1");
    KroneckerForm k;
    k.rows = n1;
    k.cols = n2;
    k.normal_rank = std::min(n1, n2);
    if (n1 == n2) {
        k.jordan.push_back({BinaryForm(), true, static_cast<int>(n1), {1}});
        return k;
    }
    std::size_t small = std::min(n1, n2), s = std::max(n1, n2) - small;
    // small = p*s + beta with 0 < beta <= s.
    std::size_t p = (small + s - 1) / s - 1;
    std::size_t beta = small - p * s, alpha = s - beta;
    std::vector<int> idx(alpha, static_cast<int>(p));
    idx.insert(idx.end(), beta, static_cast<int>(p + 1));
    (n1 < n2 ? k.left_indices : k.right_indices) = idx;
    return k;
}

OrbitInvariants orbit_closure_invariants(const MatrixPencil& pencil, std::size_t N1, std::size_t N2) {
    if (N1 < pencil.rows() || N2 < pencil.cols()) throw InputError("ambient must contain the pencil");
    KroneckerForm k = kronecker_decompose(pencil);
    OrbitInvariants inv;
    for (int p : k.left_indices) ++inv.left[p];
    for (int p : k.right_indices) ++inv.right[p];
    if (N2 > pencil.cols()) inv.left[0] += static_cast<int>(N2 - pencil.cols());
    if (N1 > pencil.rows()) inv.right[0] += static_cast<int>(N1 - pencil.rows());
    for (auto& [p, c] : inv.left) inv.left_total += c;
    for (auto& [p, c] : inv.right) inv.right_total += c;
    for (const auto& g : k.jordan) {
        std::map<int, int> counts;
        for (int s : g.sizes) ++counts[s];
        for (auto& [s, c] : counts) inv.jordan.push_back({g.certificate, s, c});
    }
    return inv;
}

SizeOneCheck size_one_block_check(const KroneckerForm& from, const KroneckerForm& to, int k1) {
    if (!from.left_indices.empty() || !from.right_indices.empty())
        throw Error("singular-blocks", "source pencil must be regular");
    auto ones = [](const JordanGroup& g) { return static_cast<int>(std::count(g.sizes.begin(), g.sizes.end(), 1)); };
    SizeOneCheck out;
    auto check = [&](const BinaryForm& cert, int a, int b) {
        if (a > k1 + b) {
            out.holds = false;
            out.violations.push_back({cert, a, b});
        }
    };
    for (const auto& g : from.jordan) {
        if (g.symbolic) throw Error("symbolic-eigenvalues", "source eigenvalues must be explicit");
        BinaryForm rest = g.certificate;
        for (const auto& h : to.jordan) {
            if (h.symbolic) throw Error("symbolic-eigenvalues", "target eigenvalues must be explicit");
            BinaryForm common = gcd(rest, h.certificate);
            if (common.degree() == 0) continue;
            check(common, ones(g), ones(h));
            rest = exact_quotient(rest, common);
        }
        if (rest.degree() > 0) check(rest.normalized(), ones(g), 0);
    }
    return out;
}

}  // namespace ptns
