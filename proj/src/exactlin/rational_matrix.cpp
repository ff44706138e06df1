//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/exactlin/rational_matrix.hpp"

#include <sstream>
#include <utility>

#include "repchar/errors.hpp"

namespace repchar {

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  RationalMatrix
  RationalMatrix::from_columns(std::size_t                               rows,
                               std::vector<std::vector<Rational>> const& columns) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw ValidationError("column length mismatch");
      }
      for (std::size_t r = 0; r < rows; ++r) {
        m(r, c) = columns[c][r];
      }
    }
    return m;
  }

  std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> v(_rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  RationalMatrix RationalMatrix::operator*(RationalMatrix const& rhs) const {
    if (_cols != rhs._rows) {
      throw ValidationError("dimension mismatch in matrix product");
    }
    RationalMatrix out(_rows, rhs._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Rational const& a = (*this)(i, k);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < rhs._cols; ++j) {
          if (!rhs(k, j).is_zero()) {
            out(i, j) += a * rhs(k, j);
          }
        }
      }
    }
    return out;
  }

  RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool RationalMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> RationalMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t col = 0; col < _cols && row < _rows; ++col) {
      std::size_t p = row;
      while (p < _rows && (*this)(p, col).is_zero()) {
        ++p;
      }
      if (p == _rows) {
        continue;
      }
      if (p != row) {
        for (std::size_t j = 0; j < _cols; ++j) {
          std::swap((*this)(p, j), (*this)(row, j));
        }
      }
      Rational const inv = Rational(1) / (*this)(row, col);
      for (std::size_t j = col; j < _cols; ++j) {
        (*this)(row, j) *= inv;
      }
      for (std::size_t r = 0; r < _rows; ++r) {
        if (r == row || (*this)(r, col).is_zero()) {
          continue;
        }
        Rational const factor = (*this)(r, col);
        for (std::size_t j = col; j < _cols; ++j) {
          if (!(*this)(row, j).is_zero()) {
            (*this)(r, j) -= factor * (*this)(row, j);
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.rref().size();
  }

  RationalMatrix RationalMatrix::kernel() const {
    RationalMatrix           r      = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool>        is_pivot(_cols, false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < _cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      std::vector<Rational> v(_cols);
      v[free] = 1;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -r(i, free);
      }
      basis.push_back(std::move(v));
    }
    return from_columns(_cols, basis);
  }

  std::optional<std::vector<Rational>>
  RationalMatrix::solve(std::vector<Rational> const& b) const {
    if (b.size() != _rows) {
      throw ValidationError("right-hand side length mismatch");
    }
    RationalMatrix aug(_rows, _cols + 1);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        aug(i, j) = (*this)(i, j);
      }
      aug(i, _cols) = b[i];
    }
    auto const pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == _cols) {
      return std::nullopt;
    }
    std::vector<Rational> x(_cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = aug(i, _cols);
    }
    return x;
  }

  std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < _rows; ++i) {
      os << '[';
      for (std::size_t j = 0; j < _cols; ++j) {
        os << (j ? " " : "") << (*this)(i, j);
      }
      os << "]\n";
    }
    return os.str();
  }

}  // namespace repchar
