#include "pencil_tns/triangle.hpp"

#include <algorithm>
#include <set>

namespace ptns {

TriangleConfig TriangleConfig::make(std::size_t m, std::size_t m12, std::size_t k1, std::size_t k2) {
    TriangleConfig c{m, m, m12, k1, k2};
    c.validate();
    return c.canonical();
}

TriangleConfig TriangleConfig::canonical() const {
    if (k2 <= k1) return *this;
    return {m02, m01, m12, k2, k1};
}

void TriangleConfig::validate() const {
    if (m01 == 0 || m02 == 0 || m12 == 0) throw InputError("bond dimensions must be positive");
    if (k1 >= m01 * m12 || k2 >= m02 * m12) throw InputError("k_i must leave a positive physical dimension");
}

bool TriangleConfig::defective_range() const {
    auto c = canonical();
    return c.m01 == c.m02 && c.k2 <= c.k1 && c.k1 < c.m12;
}

Network TriangleConfig::network() const { return Network::triangle(m01, m12, m02, 2, n1(), n2()); }

long long dim_triangle(const TriangleConfig& cfg) {
    cfg.validate();
    auto c = cfg.canonical();
    auto n1 = static_cast<long long>(c.n1()), n2 = static_cast<long long>(c.n2());
    if (!c.defective_range()) return 2 * n1 * n2;
    auto m = static_cast<long long>(c.m01), q = static_cast<long long>(c.m12);
    auto k1 = static_cast<long long>(c.k1), k2 = static_cast<long long>(c.k2);
    return 2 * m * m * q * q - m * q * q - m * q * k1 - m * q * k2 - m * k1 * k2 + 2 * k1 * k2 + m;
}

DefectReport defect_triangle(const TriangleConfig& cfg) {
    DefectReport r;
    Network net = cfg.network();
    r.dim = dim_triangle(cfg);
    r.parameters = parameter_count(net);
    r.ambient = ambient_dim(net);
    r.expected = std::min(r.parameters, r.ambient);
    r.defect = r.expected - r.dim;
    r.fiber_defect = r.parameters - r.dim;
    return r;
}

NormalFormParts normal_form_parts(const TriangleConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    auto c = cfg.canonical();
    if (!c.defective_range()) throw Error("variety fills ambient", "no normal form outside m01 = m02, k2 <= k1 < m12");
    Rng rng(seed, 0x6e66);
    std::size_t m = c.m01;
    NormalFormParts parts;
    std::set<Rational> seen;
    while (parts.zetas.size() < m) {
        Rational z = rng.uniform_rational(-50, 50);
        if (seen.insert(z).second) parts.zetas.push_back(z);
    }
    for (const auto& z : parts.zetas)
        parts.regular = block_sum(parts.regular,
                                  box_times_identity(jordan_block(1, Rational(1), z), static_cast<int>(c.m12 - c.k1)));
    std::size_t rows = (m - 1) * c.k1, cols = rows + c.k1 - c.k2;
    parts.generic = MatrixPencil(random_matrix(rows, cols, rng, -50, 50), random_matrix(rows, cols, rng, -50, 50));
    return parts;
}

MatrixPencil normal_form_sample(const TriangleConfig& cfg, std::uint64_t seed) {
    auto parts = normal_form_parts(cfg, seed);
    MatrixPencil p = block_sum(parts.regular, parts.generic);
    Rng rng(seed, 0x636f6e6a);
    return conjugate(p, random_invertible(p.rows(), rng), random_invertible(p.cols(), rng));
}

}  // namespace ptns
