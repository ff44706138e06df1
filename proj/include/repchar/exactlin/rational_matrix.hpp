//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_EXACTLIN_RATIONAL_MATRIX_HPP_
#define REPCHAR_EXACTLIN_RATIONAL_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/rational.hpp"

namespace repchar {

  // Dense matrix over Q. Used for the small systems that need explicit bases
  // (kernels, homology representatives, induced maps).
  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    // Matrix whose columns are the given vectors (all of length `rows`).
    static RationalMatrix from_columns(std::size_t                               rows,
                                       std::vector<std::vector<Rational>> const& columns);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Rational& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }

    std::vector<Rational> column(std::size_t c) const;

    RationalMatrix operator*(RationalMatrix const& rhs) const;
    RationalMatrix transpose() const;
    bool           is_zero() const;

    // Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Columns form a basis of the null space {x : Ax = 0}.
    RationalMatrix kernel() const;

    // A solution x of A x = b, if one exists.
    std::optional<std::vector<Rational>> solve(std::vector<Rational> const& b) const;

    friend bool operator==(RationalMatrix const& a, RationalMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    std::string to_string() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

}  // namespace repchar

#endif  // REPCHAR_EXACTLIN_RATIONAL_MATRIX_HPP_
