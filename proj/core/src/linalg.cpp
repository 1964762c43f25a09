#include <algorithm>

#include "pencil_tns/matrix.hpp"

namespace ptns {

// Fraction-free elimination: scale rows to integers, eliminate with integer row
// combinations and divide each row by its content to keep entries small.
std::size_t rank_rational(const Matrix<Rational>& input) {
    bool tall = input.rows() > input.cols();
    std::size_t R = tall ? input.cols() : input.rows();
    std::size_t C = tall ? input.rows() : input.cols();
    auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return tall ? input(j, i) : input(i, j); };

    std::vector<std::vector<mpz_class>> m(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).gmp().get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) m[i][j] = at(i, j).num() * (l / at(i, j).den());
    }

    std::size_t row = 0;
    mpz_class g, a, b;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t p = R;
        for (std::size_t i = row; i < R; ++i) {
            if (m[i][col] == 0) continue;
            if (p == R || abs(m[i][col]) < abs(m[p][col])) p = i;
        }
        if (p == R) continue;
        std::swap(m[p], m[row]);
        const mpz_class& piv = m[row][col];
        for (std::size_t i = row + 1; i < R; ++i) {
            if (m[i][col] == 0) continue;
            mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), m[i][col].get_mpz_t());
            a = piv / g;
            b = m[i][col] / g;
            mpz_class content = 0;
            for (std::size_t j = col; j < C; ++j) {
                m[i][j] = a * m[i][j] - b * m[row][j];
                if (m[i][j] != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m[i][j].get_mpz_t());
            }
            if (content > 1)
                for (std::size_t j = col; j < C; ++j)
                    if (m[i][j] != 0) mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), content.get_mpz_t());
        }
        ++row;
    }
    return row;
}

}  // namespace ptns
