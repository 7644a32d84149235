#ifndef MINRANK_RATIONAL_MATRIX_HPP
#define MINRANK_RATIONAL_MATRIX_HPP

#include <vector>

#include <gmpxx.h>

#include "minrank/graph.hpp"
#include "minrank/rational.hpp"

namespace minrank {

/// Square matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    /// n x n zero matrix.
    explicit RationalMatrix(int n);
    /// Throws std::invalid_argument unless rows is square.
    explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

    static RationalMatrix identity(int n);

    int dim() const { return n_; }
    const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }
    Rational& operator()(int i, int j) { return entries_[index(i, j)]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<Rational> entries_;
};

/// Rank over Q. Rows are cleared of denominators (row scaling keeps the rank)
/// and reduced by fraction-free Bareiss elimination, pivoting on the first row
/// with a nonzero entry in the current column.
int rank(const RationalMatrix& m);

/// Bareiss rank of an integer matrix. Every division in the elimination is
/// checked for exactness; a remainder throws std::logic_error.
int bareiss_rank(std::vector<std::vector<mpz_class>> rows);

bool is_symmetric(const RationalMatrix& m);

/// Graph with i ~ j (i != j) iff entry (i, j) is nonzero; the diagonal is free.
/// Throws std::invalid_argument if m is not symmetric.
Graph pattern_graph(const RationalMatrix& m);

/// Simultaneous row/column permutation: entry (i, j) moves to (perm[i], perm[j]).
RationalMatrix permute(const RationalMatrix& m, const std::vector<int>& perm);

}  // namespace minrank

#endif  // MINRANK_RATIONAL_MATRIX_HPP
