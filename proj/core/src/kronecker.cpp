#include <algorithm>

#include "pencil_tns/pencil.hpp"

namespace ptns {

std::vector<Poly> smith_invariant_factors(Matrix<Poly> m) {
    std::size_t n = m.rows(), k = m.cols();
    std::vector<Poly> out;
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < k; ++j) std::swap(m(a, j), m(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
    };
    for (std::size_t t = 0; t < std::min(n, k); ++t) {
        for (;;) {
            std::size_t pi = n, pj = k;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < k; ++j)
                    if (!m(i, j).is_zero() && (pi == n || m(i, j).degree() < m(pi, pj).degree())) pi = i, pj = j;
            if (pi == n) return out;
            swap_rows(t, pi);
            swap_cols(t, pj);
            const Poly piv = m(t, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m(i, t).is_zero()) continue;
                auto [q, r] = divmod(m(i, t), piv);
                for (std::size_t j = t; j < k; ++j)
                    if (!m(t, j).is_zero()) m(i, j) -= q * m(t, j);
                clean = clean && r.is_zero();
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                if (m(t, j).is_zero()) continue;
                auto [q, r] = divmod(m(t, j), piv);
                for (std::size_t i = t; i < n; ++i)
                    if (!m(i, t).is_zero()) m(i, j) -= q * m(i, t);
                clean = clean && r.is_zero();
            }
            if (!clean) continue;

            // Pivot must divide the rest; otherwise fold an offending row in and repeat.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < k; ++j)
                    if (!(m(i, j) % piv).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t j = t; j < k; ++j) m(t, j) += m(bad, j);
        }
        out.push_back(m(t, t).monic());
    }
    return out;
}

std::size_t normal_rank(const MatrixPencil& p) {
    std::size_t best = 0, bound = std::min(p.rows(), p.cols());
    for (long t = 0; t <= static_cast<long>(bound) && best < bound; ++t)
        best = std::max(best, rank(p.at(Rational(1), Rational(t))));
    return best;
}

namespace {

// Point (1:t) where the pencil attains its normal rank.
long regular_point(const MatrixPencil& p, std::size_t nrank) {
    for (long t = 0;; ++t)
        if (rank(p.at(Rational(1), Rational(t))) == nrank) return t;
}

// Degrees of a minimal polynomial basis of the right kernel (L block indices).
std::vector<int> right_kernel_indices(const MatrixPencil& p, std::size_t target) {
    std::vector<int> idx;
    if (target == 0) return idx;
    std::size_t n1 = p.rows(), n2 = p.cols();
    std::size_t prev_dim = 0, prev_count = 0;
    for (std::size_t k = 0;; ++k) {
        // Coefficients of v0^(k+1-i) v1^i in P(v) x(v), x homogeneous of degree k.
        Matrix<Rational> M((k + 2) * n1, (k + 1) * n2);
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t r = 0; r < n1; ++r)
                for (std::size_t c = 0; c < n2; ++c) {
                    M(j * n1 + r, j * n2 + c) = p.A(r, c);
                    M((j + 1) * n1 + r, j * n2 + c) = p.B(r, c);
                }
        std::size_t dim = (k + 1) * n2 - rank(M);
        std::size_t count = dim - prev_dim;  // indices <= k
        idx.insert(idx.end(), count - prev_count, static_cast<int>(k));
        if (count >= target) break;
        if (k > n1 + 1) throw Error("internal", "minimal index search did not terminate");
        prev_dim = dim;
        prev_count = count;
    }
    return idx;
}

struct RegularData {
    long t = 0;
    std::vector<Poly> factors;  // invariant factors in x, where v0 = x, v1 = t x + 1
};

RegularData regular_data(const MatrixPencil& p, std::size_t nrank) {
    RegularData d;
    d.t = regular_point(p, nrank);
    Rational t(d.t);
    Matrix<Poly> m(p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            m(i, j) = Poly(std::vector<Rational>{p.B(i, j), p.A(i, j) + t * p.B(i, j)});
    d.factors = smith_invariant_factors(std::move(m));
    return d;
}

// Polynomial in x back to a form in (v0, v1) via x = v0, y = v1 - t v0.
BinaryForm to_form(const Poly& h, long t) {
    return BinaryForm::homogenize(h, h.degree()).substitute(Rational(1), Rational(0), Rational(-t), Rational(1)).normalized();
}

}  // namespace

std::vector<BinaryForm> invariant_factors(const MatrixPencil& p) {
    std::size_t r = normal_rank(p);
    RegularData d = regular_data(p, r);
    std::vector<BinaryForm> out;
    for (const auto& f : d.factors) out.push_back(to_form(f, d.t));
    return out;
}

std::vector<BinaryForm> determinantal_divisors(const MatrixPencil& p) {
    std::vector<BinaryForm> out;
    BinaryForm acc = BinaryForm::constant(Rational(1));
    for (const auto& f : invariant_factors(p)) {
        acc = (acc * f).normalized();
        out.push_back(acc);
    }
    return out;
}

BinaryForm pencil_determinant(const MatrixPencil& p) {
    if (p.rows() != p.cols()) throw Error("shape-mismatch", "determinant of a non-square pencil");
    std::size_t n = p.rows();
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= n; ++t) {
        xs.emplace_back(static_cast<long>(t));
        ys.push_back(det(p.at(Rational(1), xs.back())));
    }
    Poly f = interpolate(xs, ys);
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[i] = f.coeff(static_cast<int>(i));
    return BinaryForm(static_cast<int>(n), std::move(c));
}

KroneckerForm kronecker_decompose(const MatrixPencil& p) {
    KroneckerForm k;
    k.rows = p.rows();
    k.cols = p.cols();
    k.normal_rank = normal_rank(p);
    k.left_indices = right_kernel_indices(p, k.cols - k.normal_rank);
    k.right_indices = right_kernel_indices(p.transpose(), k.rows - k.normal_rank);
    if (k.normal_rank == 0) return k;

    RegularData d = regular_data(p, k.normal_rank);
    const auto& inv = d.factors;
    if (inv.back().is_constant()) return k;

    // Split the roots of the largest invariant factor by their multiplicity in every
    // invariant factor; each part then has a single list of block sizes.
    struct Part {
        Poly h;
        std::vector<int> mult;
    };
    std::vector<Part> parts;
    Poly top = Poly::constant(Rational(1));
    for (auto& [a, e] : squarefree_factors(inv.back())) top = top * a;
    parts.push_back({top, {}});
    for (const auto& f : inv) {
        auto sqf = squarefree_factors(f);
        std::vector<Part> next;
        for (auto& part : parts) {
            Poly rest = part.h;
            for (auto& [s, e] : sqf) {
                Poly g = gcd(rest, s);
                if (g.is_constant()) continue;
                auto m = part.mult;
                m.push_back(e);
                next.push_back({g, m});
                rest = rest / g;
            }
            if (!rest.is_constant()) {
                auto m = part.mult;
                m.push_back(0);
                next.push_back({rest.monic(), m});
            }
        }
        parts = std::move(next);
    }
    for (auto& part : parts) {
        JordanGroup g;
        g.certificate = to_form(part.h, d.t);
        g.eigen_count = part.h.degree();
        for (int e : part.mult)
            if (e > 0) g.sizes.push_back(e);
        std::sort(g.sizes.rbegin(), g.sizes.rend());
        k.jordan.push_back(std::move(g));
    }
    std::sort(k.jordan.begin(), k.jordan.end(), [](const JordanGroup& a, const JordanGroup& b) {
        if (a.sizes != b.sizes) return a.sizes > b.sizes;
        return a.certificate.coeffs() < b.certificate.coeffs();
    });
    return k;
}

}  // namespace ptns
