//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_EXACTLIN_INTEGER_MATRIX_HPP_
#define REPCHAR_EXACTLIN_INTEGER_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "repchar/exactlin/rational.hpp"

namespace repchar {

  class SparseMatrix;

  // Dense matrix over Z.
  class IntegerMatrix {
   public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    BigInt& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    BigInt const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    IntegerMatrix       operator*(IntegerMatrix const& rhs) const;
    std::vector<BigInt> operator*(std::vector<BigInt> const& v) const;
    IntegerMatrix       operator+(IntegerMatrix const& rhs) const;
    IntegerMatrix       operator-(IntegerMatrix const& rhs) const;
    IntegerMatrix       transpose() const;
    bool                is_zero() const;

    // Fraction-free (Bareiss) determinant of a square matrix.
    BigInt determinant() const;

    SparseMatrix to_sparse() const;

    friend bool operator==(IntegerMatrix const& a, IntegerMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    std::string to_string() const;

   private:
    std::size_t         _rows = 0;
    std::size_t         _cols = 0;
    std::vector<BigInt> _data;
  };

  // U * A * V = D with U, V unimodular and D diagonal; the nonzero diagonal
  // entries d_1 | d_2 | ... are positive.
  struct SmithForm {
    std::vector<BigInt> factors;
    IntegerMatrix       left;
    IntegerMatrix       right;
    IntegerMatrix       diagonal;
  };

  SmithForm smith_normal_form(IntegerMatrix const& a);

  // Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_s with
  // 1 < d_1 | d_2 | ... | d_s.
  struct AbelianGroup {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    // Order of the group; zero when infinite.
    BigInt order() const;

    std::string to_string() const;

    friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
  };

  // The cokernel Z^m / A Z^n of an m x n integer matrix, together with the
  // coordinates needed to reduce elements of Z^m to canonical form.
  class Cokernel {
   public:
    explicit Cokernel(IntegerMatrix const& a);

    AbelianGroup const& group() const noexcept {
      return _group;
    }
    std::size_t ambient_rank() const noexcept {
      return _left.cols();
    }

    // Canonical coordinates of the class of v: first one coordinate per
    // torsion factor (reduced into [0, d)), then the free coordinates.
    std::vector<BigInt> reduce(std::vector<BigInt> const& v) const;

   private:
    AbelianGroup        _group;
    IntegerMatrix       _left;
    std::vector<BigInt> _diag;  // diagonal entry per row of U (0 beyond rank)
  };

}  // namespace repchar

#endif  // REPCHAR_EXACTLIN_INTEGER_MATRIX_HPP_
