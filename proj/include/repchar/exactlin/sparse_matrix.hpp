//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_EXACTLIN_SPARSE_MATRIX_HPP_
#define REPCHAR_EXACTLIN_SPARSE_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "repchar/exactlin/rational.hpp"

namespace repchar {

  class RationalMatrix;

  // Sparse matrix over Q in compressed-column form. Columns are kept sorted
  // by row index and never store an explicit zero.
  class SparseMatrix {
   public:
    struct Entry {
      std::uint32_t row;
      Rational      value;
    };

    struct Triplet {
      std::size_t row;
      std::size_t col;
      Rational    value;
    };

    // Accumulates entries in any order; duplicates are summed on build().
    class Builder {
     public:
      Builder(std::size_t rows, std::size_t cols);
      void add(std::size_t row, std::size_t col, Rational const& value);
      void add(std::size_t row, std::size_t col, std::int64_t value);
      SparseMatrix build() &&;

     private:
      std::size_t                                    _rows;
      std::size_t                                    _cols;
      std::vector<std::vector<std::pair<std::uint32_t, Rational>>> _cols_data;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_triplets(std::size_t                 rows,
                                      std::size_t                 cols,
                                      std::vector<Triplet> const& triplets);
    static SparseMatrix from_dense(RationalMatrix const& m);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::size_t nnz() const noexcept;
    bool        is_zero() const noexcept {
      return nnz() == 0;
    }

    std::span<Entry const> column(std::size_t c) const {
      return _columns[c];
    }
    Rational at(std::size_t row, std::size_t col) const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(SparseMatrix const& rhs) const;
    SparseMatrix operator+(SparseMatrix const& rhs) const;
    SparseMatrix operator-(SparseMatrix const& rhs) const;
    SparseMatrix scaled(Rational const& factor) const;

    // Columns [first, first + count) as a new matrix.
    SparseMatrix column_block(std::size_t first, std::size_t count) const;

    RationalMatrix to_dense() const;

    // Exact rank over Q by fraction-free elimination.
    std::size_t rank() const;

    friend bool operator==(SparseMatrix const& a, SparseMatrix const& b);
    friend bool operator!=(SparseMatrix const& a, SparseMatrix const& b) {
      return !(a == b);
    }

   private:
    std::size_t                     _rows = 0;
    std::size_t                     _cols = 0;
    std::vector<std::vector<Entry>> _columns;
  };

  // Rank of the span of sparse integer vectors in Z^dim (equivalently over Q).
  // Each vector is a list of (index, value) pairs with distinct indices.
  std::size_t
  integer_vectors_rank(std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> vectors,
                       std::size_t                                              dim);

}  // namespace repchar

#endif  // REPCHAR_EXACTLIN_SPARSE_MATRIX_HPP_
