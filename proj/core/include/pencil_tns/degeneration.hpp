#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pencil_tns/laurent.hpp"
#include "pencil_tns/quotient_ring.hpp"
#include "pencil_tns/tensor.hpp"

namespace ptns {

using Laurent = LaurentPoly<Rational>;

// sum of coef * a_i (x) b_j (x) c_k over a 3x3x3 grid.
template <class S>
Tensor<S> tensor_from_terms(const std::vector<std::tuple<S, std::size_t, std::size_t, std::size_t>>& terms) {
    Tensor<S> t({3, 3, 3});
    for (const auto& [c, i, j, k] : terms) t.at({i, j, k}) += c;
    return t;
}

// The one-parameter family with diagonal part, a lambda-weighted cyclic part and a0 b2 c1.
template <class S>
Tensor<S> tensor_ii2(const S& lambda) {
    const S one(1);
    return tensor_from_terms<S>({{one, 0, 0, 0},
                                 {one, 1, 1, 1},
                                 {one, 2, 2, 2},
                                 {lambda, 0, 1, 2},
                                 {lambda, 1, 2, 0},
                                 {lambda, 2, 0, 1},
                                 {one, 0, 2, 1}});
}
Tensor<Rational> tensor_iii2();
Tensor<Rational> tensor_iv2();
Tensor<Rational> tensor_zero2();

// Maps use the basis-vector -> image convention: column i of maps[s] is the image of basis vector i.
struct EpsilonCurve {
    std::string name;
    std::optional<Laurent> lambda;  // parameter of the source family, if any
    Tensor<Laurent> source;
    std::array<Matrix<Laurent>, 3> maps;
    Laurent scale{Rational(1)};
    Tensor<Rational> target;
};

EpsilonCurve curve_iii2();
EpsilonCurve curve_iv2();
// Second stage of the nullcone case, starting from zero2_intermediate().
EpsilonCurve curve_zero2();

// Coordinate change applied to the slot-swapped III.2 tensor.
std::array<Matrix<Rational>, 3> zero2_coordinate_change();
Tensor<Rational> zero2_intermediate();
Tensor<Rational> zero2_intermediate_expected();

struct PoleEntry {
    Index entry;
    int order;
};

struct DegenerationTranscript {
    std::string name;
    bool verified = false;
    Tensor<Laurent> image;  // after scaling
    int leading_order = 0;  // lowest eps power before scaling
    std::vector<PoleEntry> poles;
    std::vector<Index> mismatches;
    Tensor<Rational> limit;  // empty when a pole is present
    std::vector<std::pair<std::string, bool>> checks;  // auxiliary steps
};

DegenerationTranscript verify_epsilon_degeneration(const EpsilonCurve& curve);
// "iii2", "iv2" or "zero2"; throws InputError for other names.
DegenerationTranscript verify_named_degeneration(const std::string& name);

// Graph tensor of the triangle with bonds 2: sum e_{2i+j} (x) e_{2j+k} (x) e_{2k+i}.
template <class S>
Tensor<S> triangle_graph_tensor() {
    Tensor<S> t({4, 4, 4});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) t.at({2 * i + j, 2 * j + k, 2 * k + i}) = S(1);
    return t;
}

// The three 3 x 4 maps taking the triangle graph tensor to the lambda-member of the family.
template <class S>
std::array<Matrix<S>, 3> restriction_maps(const S& lambda, const S& mu) {
    S inv = S(1) / mu;
    // per factor: which of the three basis vectors the four bond pairs map to
    const std::array<std::array<std::size_t, 4>, 3> target{{{0, 1, 2, 0}, {2, 0, 1, 2}, {1, 2, 0, 1}}};
    const std::array<S, 4> weight{inv, mu, S(1), inv * lambda};
    std::array<Matrix<S>, 3> maps;
    for (std::size_t f = 0; f < 3; ++f) {
        maps[f] = Matrix<S>(3, 4);
        for (std::size_t w = 0; w < 4; ++w) maps[f](target[f][w], w) = weight[w];
    }
    return maps;
}

struct RestrictionReport {
    Rational lambda;
    Rational cube;                    // mu^3 = 1 + lambda^3
    std::optional<Rational> mu;       // set when the cube root is rational
    std::vector<Index> mismatches;
    bool verified = false;
};

// Throws Error("not-invertible") at lambda = -1.
RestrictionReport verify_restriction(const Rational& lambda);

// Rational cube root, if one exists.
std::optional<Rational> rational_cube_root(const Rational& q);

}  // namespace ptns
