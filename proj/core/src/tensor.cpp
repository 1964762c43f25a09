#include "pencil_tns/tensor.hpp"

#include "pencil_tns/rng.hpp"

namespace ptns {

Tensor<Rational> random_tensor(const Shape& shape, Rng& rng, long lo, long hi) {
    Tensor<Rational> t(shape);
    for (auto& x : t.entries()) x = rng.uniform_rational(lo, hi);
    return t;
}

Tensor<Rational> random_tensor(const Shape& shape, std::uint64_t seed, long lo, long hi) {
    Rng rng(seed);
    return random_tensor(shape, rng, lo, hi);
}

Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long lo, long hi) {
    Matrix<Rational> m(rows, cols);
    for (auto& x : m.data()) x = rng.uniform_rational(lo, hi);
    return m;
}

Matrix<Rational> random_invertible(std::size_t n, Rng& rng, long lo, long hi) {
    for (;;) {
        Matrix<Rational> m = random_matrix(n, n, rng, lo, hi);
        if (rank(m) == n) return m;
    }
}

Tensor<Fp> reduce_mod(const Tensor<Rational>& t, std::uint64_t p) {
    return map_entries<Fp>(t, [p](const Rational& q) { return Fp::from_rational(q, p); });
}

Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p) {
    Matrix<Fp> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.data().size(); ++i) r.data()[i] = Fp::from_rational(m.data()[i], p);
    return r;
}

}  // namespace ptns
