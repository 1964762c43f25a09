#include "pencil_tns/membership.hpp"

#include "pencil_tns/rng.hpp"

namespace ptns {

namespace {

constexpr int kProfileAttempts = 3;
constexpr int kMaxDraws = 24;
constexpr long kProjectionRange = 20;

std::size_t nullity_of(const Matrix<Rational>& m) { return m.cols() - rank(m); }

Matrix<Rational> select_columns(const Matrix<Rational>& m, const std::vector<std::size_t>& cols) {
    Matrix<Rational> r(m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = m(i, cols[j]);
    return r;
}

// Is the restriction of every kernel vector to `cols` in the kernel of those columns?
bool restrictions_in_kernel(const Matrix<Rational>& system, const Matrix<Rational>& kernel,
                            const std::vector<std::size_t>& cols) {
    Matrix<Rational> sub = select_columns(system, cols);
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        Matrix<Rational> v(cols.size(), 1);
        for (std::size_t j = 0; j < cols.size(); ++j) v(j, 0) = kernel(cols[j], k);
        if (!(sub * v).is_zero()) return false;
    }
    return true;
}

void require_concise(const Tensor<Rational>& t, const std::vector<std::size_t>& slots, const char* which) {
    auto ok = concise_slots(t);
    for (auto s : slots)
        if (!ok[s]) throw Error("not-concise", std::string(which) + " is not concise on slot " + std::to_string(s));
}

}  // namespace

std::vector<int> lambda_partition(const TriangleConfig& input, std::size_t kappa) {
    TriangleConfig cfg = input.canonical();
    if (cfg.m01 != cfg.m02) throw InputError("profile test needs m01 = m02");
    if (kappa < cfg.k1 || kappa + 2 > cfg.m12)
        throw InputError("kappa must lie in [k1, m12 - 2]");
    std::vector<int> lambda(cfg.m01, static_cast<int>(cfg.m12 - kappa));
    lambda.insert(lambda.end(), (cfg.m01 - 1) * kappa, 1);
    return lambda;
}

ProfileVerdict determinant_profile_test(const MatrixPencil& p, const TriangleConfig& cfg, std::size_t kappa,
                                        std::uint64_t seed) {
    ProfileVerdict out;
    out.lambda = lambda_partition(cfg, kappa);
    TriangleConfig c = cfg.canonical();
    std::size_t n = c.m01 * c.m12 - kappa;
    out.size = n;
    if (p.rows() < n || p.cols() < n)
        throw InputError("pencil is smaller than " + std::to_string(n) + " x " + std::to_string(n));

    bool exact = p.rows() == n && p.cols() == n;
    Rng rng(seed, 0x70726f66);
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        MatrixPencil q = exact ? p
                               : conjugate(p, random_matrix(n, p.rows(), rng, -kProjectionRange, kProjectionRange),
                                           random_matrix(p.cols(), n, rng, -kProjectionRange, kProjectionRange));
        BinaryForm d = pencil_determinant(q);
        if (d.is_zero()) {
            ++out.degenerate_draws;
            if (exact) break;
            continue;
        }
        ProjectionAttempt attempt;
        attempt.profile = squarefree_decompose(d).partition;
        attempt.coarsens = merge_coarsening(attempt.profile, out.lambda);
        out.attempts.push_back(attempt);
        if (attempt.coarsens) {
            out.member = true;
            return out;
        }
        if (exact || out.attempts.size() == kProfileAttempts) return out;
    }
    throw Error("degenerate projection, resample", "determinant vanished on every projection");
}

RankDropResult rank_drop_points(const MatrixPencil& input, std::size_t r) {
    MatrixPencil p = input.rows() > input.cols() ? input.transpose() : input;
    if (r >= p.rows()) throw Error("vacuous", "r must be below min(n1, n2)");
    RankDropResult out;
    auto divisors = determinantal_divisors(p);
    if (r >= divisors.size()) {
        out.infinite = true;
        return out;
    }
    out.divisor = divisors[r];
    if (out.divisor.degree() == 0) return out;
    auto prof = squarefree_decompose(out.divisor);
    out.profile = prof.partition;
    out.factors = prof.factors;
    out.count = static_cast<std::size_t>(squarefree_part(out.divisor).degree());
    return out;
}

std::vector<RankDropPoint> jordan_count_at_rank_drop(const MatrixPencil& p, std::size_t r) {
    if (!is_concise(p.to_tensor()))
        throw Error("not-concise", "restrict to the concise subspaces before testing rank drops");
    KroneckerForm form = kronecker_decompose(p);
    int nrank = static_cast<int>(form.normal_rank);
    auto divisors = determinantal_divisors(p);
    std::vector<RankDropPoint> out;
    for (const auto& g : form.jordan) {
        int blocks = static_cast<int>(g.sizes.size());
        if (blocks < nrank - static_cast<int>(r)) continue;
        RankDropPoint pt{g.certificate, g.eigen_count, 0, blocks, false};
        if (g.certificate.degree() == 1) {
            const Rational &z0 = g.certificate.coeff(0), &z1 = g.certificate.coeff(1);
            pt.drop = nrank - static_cast<int>(rank(p.at(z1, -z0)));
        } else {
            // rank at a root is the largest k with d_k nonzero there
            int k = 0;
            while (k < nrank && !divides(g.certificate, divisors[static_cast<std::size_t>(k)])) ++k;
            pt.drop = nrank - k;
        }
        pt.verified = pt.drop == blocks;
        out.push_back(pt);
    }
    return out;
}

CubicTestResult determinantal_cubics_test(const Tensor<Rational>& t) {
    CubicTestResult out;
    out.cubics = determinantal_cubics(t);
    out.pass = true;
    for (std::size_t s = 0; s < 3; ++s) {
        if (out.cubics[s].is_zero()) {
            out.ranks[s] = -1;
            continue;
        }
        out.ranks[s] = static_cast<int>(cubic_action_rank(out.cubics[s]));
        if (out.ranks[s] >= 8) out.pass = false;
    }
    return out;
}

Matrix<Rational> annihilator_system(const Tensor<Rational>& t, const std::vector<std::size_t>& acting) {
    std::vector<std::size_t> first_col;
    std::size_t cols = 0;
    for (auto s : acting) {
        if (s >= t.order()) throw InputError("acting slot out of range");
        first_col.push_back(cols);
        cols += t.dim(s) * t.dim(s);
    }
    Matrix<Rational> m(t.size(), cols);
    for (std::size_t k = 0; k < acting.size(); ++k) {
        std::size_t s = acting[k], n = t.dim(s), stride = 1;
        for (std::size_t u = s + 1; u < t.order(); ++u) stride *= t.dim(u);
        for (std::size_t off = 0; off < t.size(); ++off) {
            const Rational& v = t.entries()[off];
            if (v.is_zero()) continue;
            std::size_t b = (off / stride) % n, base = off - b * stride;
            for (std::size_t a = 0; a < n; ++a) m(base + a * stride, first_col[k] + a * n + b) += v;
        }
    }
    return m;
}

std::size_t annihilator_dim(const Tensor<Rational>& t, const std::vector<std::size_t>& acting) {
    return nullity_of(annihilator_system(t, acting));
}

BlockAnnihilatorReport block_annihilator_check(const Tensor<Rational>& t1, const Tensor<Rational>& t2, BlockMode mode) {
    if (t1.order() != 3 || t2.order() != 3) throw InputError("blocks must be order-3 tensors");
    bool pencil = mode == BlockMode::pencil;
    if (pencil && t1.dim(0) != t2.dim(0)) throw InputError("pencil blocks must share the first factor");
    std::vector<std::size_t> acting = pencil ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{0, 1, 2};
    require_concise(t1, acting, "first block");
    require_concise(t2, acting, "second block");

    Tensor<Rational> sum = pencil ? direct_sum(t1, t2, {0}) : direct_sum(t1, t2);
    Matrix<Rational> system = annihilator_system(sum, acting);

    // Column classes by which block the elementary matrix maps from and to.
    std::vector<std::size_t> diag1, diag2, off1, off2, mixed;
    std::size_t col = 0;
    for (std::size_t k = 0; k < acting.size(); ++k) {
        std::size_t s = acting[k], split = t1.dim(s), n = sum.dim(s);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b, ++col) {
                bool a1 = a < split, b1 = b < split;
                if (a1 && b1) diag1.push_back(col);
                else if (!a1 && !b1) diag2.push_back(col);
                else if (!pencil) mixed.push_back(col);
                // M1 pairs first-to-second on the rows with second-to-first on the columns
                else if ((k == 0) == (b1 && !a1)) off1.push_back(col);
                else off2.push_back(col);
            }
    }

    BlockAnnihilatorReport out;
    out.total = nullity_of(system);
    out.first = annihilator_dim(t1, acting);
    out.second = annihilator_dim(t2, acting);
    if (pencil) {
        out.m1 = nullity_of(select_columns(system, off1));
        out.m2 = nullity_of(select_columns(system, off2));
    }

    Matrix<Rational> kernel = nullspace(system);
    bool contained = restrictions_in_kernel(system, kernel, diag1) && restrictions_in_kernel(system, kernel, diag2);
    if (pencil) {
        contained = contained && restrictions_in_kernel(system, kernel, off1) &&
                    restrictions_in_kernel(system, kernel, off2);
    } else {
        for (std::size_t k = 0; k < kernel.cols() && contained; ++k)
            for (auto c : mixed)
                if (!kernel(c, k).is_zero()) {
                    contained = false;
                    break;
                }
    }
    out.contained = contained;
    out.equal = contained && out.total == out.first + out.second + out.m1 + out.m2;
    return out;
}

Matrix<Rational> bridge_matrix(const Tensor<Rational>& s, const Tensor<Rational>& t) {
    if (t.shape() != Shape{2, 3, 4}) throw InputError("bridge map needs a tensor of shape (2, 3, 4)");
    if (s.order() != 3 || s.dim(0) != 2 || s.dim(1) % 4 != 0 || s.dim(2) * 4 != s.dim(1) * 3)
        throw InputError("auxiliary tensor must have shape (2, 4q, 3q)");
    std::size_t u1n = s.dim(1), u2n = s.dim(2);
    Matrix<Rational> f(u2n * 4, u1n * 3);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t u1 = 0; u1 < u1n; ++u1)
            for (std::size_t u2 = 0; u2 < u2n; ++u2) {
                const Rational& sv = s.at({a, u1, u2});
                if (sv.is_zero()) continue;
                for (std::size_t v1 = 0; v1 < 3; ++v1)
                    for (std::size_t v2 = 0; v2 < 4; ++v2) {
                        const Rational& tv = t.at({a, v1, v2});
                        if (!tv.is_zero()) f(u2 * 4 + v2, u1 * 3 + v1) += sv * tv;
                    }
            }
    return f;
}

std::size_t bridge_map_rank(const Tensor<Rational>& t, std::size_t q, std::uint64_t seed) {
    if (q == 0) throw InputError("q must be positive");
    Rng rng(seed, 0x62726467);
    return rank(bridge_matrix(random_tensor({2, 4 * q, 3 * q}, rng, -50, 50), t));
}

}  // namespace ptns
