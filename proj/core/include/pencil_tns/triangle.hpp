#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pencil_tns/network.hpp"
#include "pencil_tns/pencil.hpp"

namespace ptns {

// Triangle network with a 2-dimensional vertex 0, bonds (m01, m02, m12) and physical
// dimensions n_i = m0i * m12 - k_i at the other two vertices. Canonical form has k2 <= k1.
struct TriangleConfig {
    std::size_t m01 = 2, m02 = 2, m12 = 2;
    std::size_t k1 = 0, k2 = 0;

    static TriangleConfig make(std::size_t m, std::size_t m12, std::size_t k1, std::size_t k2);
    TriangleConfig canonical() const;
    std::size_t n1() const { return m01 * m12 - k1; }
    std::size_t n2() const { return m02 * m12 - k2; }
    // m01 = m02 and k2 <= k1 < m12 (in canonical form).
    bool defective_range() const;
    Network network() const;
    void validate() const;
};

long long dim_triangle(const TriangleConfig& cfg);

struct DefectReport {
    long long dim = 0;
    long long expected = 0;
    long long parameters = 0;
    long long ambient = 0;
    long long defect = 0;        // expected - dim
    long long fiber_defect = 0;  // parameters - dim
};
DefectReport defect_triangle(const TriangleConfig& cfg);

struct NormalFormParts {
    MatrixPencil regular;  // sum over i of J_1(v0 + z_i v1) boxed with I_{m12-k1}
    MatrixPencil generic;  // random (m-1)k1 x ((m-1)k1 + k1 - k2)
    std::vector<Rational> zetas;
};
NormalFormParts normal_form_parts(const TriangleConfig& cfg, std::uint64_t seed);
// regular + generic, conjugated by random invertible matrices. Throws
// Error("variety fills ambient") outside the defective range.
MatrixPencil normal_form_sample(const TriangleConfig& cfg, std::uint64_t seed);

}  // namespace ptns
