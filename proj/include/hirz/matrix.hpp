#pragma once

#include <vector>

#include "hirz/rational.hpp"

namespace hirz {

// Dense exact rational matrix.  Only the operations the homology and k-theory
// code actually needs: rank, solvability of Ax=b, and a kernel basis.
class MatQ {
  public:
    MatQ(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }

    // rank() picks between the two implementations by size; both are exact and
    // a test asserts they agree on random matrices.
    int rank() const;
    int rank_bareiss() const;  // fraction-free elimination over the integers
    int rank_sparse() const;   // sparse exact elimination, for large thin pieces

    // True iff Ax = b has a solution.
    bool solvable(const std::vector<Rational>& b) const;

    // Basis of { x : Ax = 0 }, each vector of length cols().
    std::vector<std::vector<Rational>> kernel_basis() const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
};

}  // namespace hirz
