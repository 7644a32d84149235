#include "minrank/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace minrank {

RationalMatrix::RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : RationalMatrix(static_cast<int>(rows.size())) {
    for (int i = 0; i < n_; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n_) {
            throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(n_));
        }
        for (int j = 0; j < n_; ++j) (*this)(i, j) = row[static_cast<std::size_t>(j)];
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

int bareiss_rank(std::vector<std::vector<mpz_class>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    mpz_class prev = 1;
    std::size_t r = 0;
    mpz_class quotient;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const mpz_class& pivot = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = pivot * a[i][j] - a[i][c] * a[r][j];
                if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t())) {
                    throw std::logic_error("Bareiss step produced a non-integral entry");
                }
                mpz_divexact(quotient.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = quotient;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return static_cast<int>(r);
}

int rank(const RationalMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<mpz_class>> ints(static_cast<std::size_t>(n),
                                             std::vector<mpz_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        mpz_class scale = 1;
        for (int j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (int j = 0; j < n; ++j) {
            ints[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m(i, j).numerator() * (scale / m(i, j).denominator());
        }
    }
    return bareiss_rank(std::move(ints));
}

bool is_symmetric(const RationalMatrix& m) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

Graph pattern_graph(const RationalMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("pattern graph of an asymmetric matrix");
    Graph g(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i + 1; j < m.dim(); ++j)
            if (!m(i, j).is_zero()) g.add_edge(i, j);
    return g;
}

RationalMatrix permute(const RationalMatrix& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.dim()) throw std::invalid_argument("permutation size mismatch");
    RationalMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = m(i, j);
    return out;
}

}  // namespace minrank
