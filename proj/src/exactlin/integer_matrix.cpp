//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/exactlin/integer_matrix.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "repchar/errors.hpp"
#include "repchar/exactlin/sparse_matrix.hpp"

namespace repchar {

  IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    _rows = rows.size();
    _cols = _rows == 0 ? 0 : rows.begin()->size();
    _data.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw ValidationError("ragged integer matrix literal");
      }
      for (long x : r) {
        _data.emplace_back(x);
      }
    }
  }

  IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntegerMatrix IntegerMatrix::operator*(IntegerMatrix const& rhs) const {
    if (_cols != rhs._rows) {
      throw ValidationError("dimension mismatch in integer matrix product");
    }
    IntegerMatrix out(_rows, rhs._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        BigInt const& a = (*this)(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < rhs._cols; ++j) {
          out(i, j) += a * rhs(k, j);
        }
      }
    }
    return out;
  }

  std::vector<BigInt> IntegerMatrix::operator*(std::vector<BigInt> const& v) const {
    if (v.size() != _cols) {
      throw ValidationError("dimension mismatch in matrix-vector product");
    }
    std::vector<BigInt> out(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  IntegerMatrix IntegerMatrix::operator+(IntegerMatrix const& rhs) const {
    if (_rows != rhs._rows || _cols != rhs._cols) {
      throw ValidationError("dimension mismatch in integer matrix sum");
    }
    IntegerMatrix out = *this;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] += rhs._data[i];
    }
    return out;
  }

  IntegerMatrix IntegerMatrix::operator-(IntegerMatrix const& rhs) const {
    if (_rows != rhs._rows || _cols != rhs._cols) {
      throw ValidationError("dimension mismatch in integer matrix difference");
    }
    IntegerMatrix out = *this;
    for (std::size_t i = 0; i < _data.size(); ++i) {
      out._data[i] -= rhs._data[i];
    }
    return out;
  }

  IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool IntegerMatrix::is_zero() const {
    for (auto const& x : _data) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  BigInt IntegerMatrix::determinant() const {
    if (_rows != _cols) {
      throw ValidationError("determinant of a non-square matrix");
    }
    // Bareiss fraction-free elimination.
    IntegerMatrix m    = *this;
    std::size_t   n    = _rows;
    BigInt        prev = 1;
    int           sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(k, j), m(p, j));
        }
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return n == 0 ? BigInt(1) : BigInt(sign * m(n - 1, n - 1));
  }

  SparseMatrix IntegerMatrix::to_sparse() const {
    SparseMatrix::Builder b(_rows, _cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(i, j) != 0) {
          b.add(i, j, Rational((*this)(i, j)));
        }
      }
    }
    return std::move(b).build();
  }

  std::string IntegerMatrix::to_string() const {
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

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  namespace {

    BigInt floor_div(BigInt const& a, BigInt const& b) {
      BigInt q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    class SmithReducer {
     public:
      explicit SmithReducer(IntegerMatrix const& a)
          : _m(a), _u(IntegerMatrix::identity(a.rows())), _v(IntegerMatrix::identity(a.cols())) {}

      SmithForm run() {
        std::size_t const rows = _m.rows();
        std::size_t const cols = _m.cols();
        std::size_t       t    = 0;
        while (t < rows && t < cols) {
          if (!move_smallest_to(t)) {
            break;
          }
          for (;;) {
            bool clean = clear_column(t);
            clean      = clear_row(t) && clean;
            if (!clean) {
              move_smallest_to(t);
              continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            auto bad = find_non_multiple(t);
            if (!bad) {
              break;
            }
            add_row(t, *bad, 1);
          }
          if (_m(t, t) < 0) {
            negate_row(t);
          }
          ++t;
        }
        SmithForm out;
        for (std::size_t i = 0; i < t; ++i) {
          out.factors.push_back(_m(i, i));
        }
        out.left     = std::move(_u);
        out.right    = std::move(_v);
        out.diagonal = std::move(_m);
        return out;
      }

     private:
      // Brings a nonzero entry of minimal absolute value in the block
      // [t.., t..] to position (t, t). Returns false if the block is zero.
      bool move_smallest_to(std::size_t t) {
        std::size_t br = 0, bc = 0;
        BigInt      best = -1;
        for (std::size_t i = t; i < _m.rows(); ++i) {
          for (std::size_t j = t; j < _m.cols(); ++j) {
            if (_m(i, j) != 0) {
              BigInt a = abs(_m(i, j));
              if (best < 0 || a < best) {
                best = a;
                br   = i;
                bc   = j;
              }
            }
          }
        }
        if (best < 0) {
          return false;
        }
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
      }

      bool clear_column(std::size_t t) {
        bool clean = true;
        for (std::size_t i = t + 1; i < _m.rows(); ++i) {
          if (_m(i, t) == 0) {
            continue;
          }
          BigInt q = floor_div(_m(i, t), _m(t, t));
          add_row(i, t, -q);
          if (_m(i, t) != 0) {
            clean = false;
          }
        }
        return clean;
      }

      bool clear_row(std::size_t t) {
        bool clean = true;
        for (std::size_t j = t + 1; j < _m.cols(); ++j) {
          if (_m(t, j) == 0) {
            continue;
          }
          BigInt q = floor_div(_m(t, j), _m(t, t));
          add_col(j, t, -q);
          if (_m(t, j) != 0) {
            clean = false;
          }
        }
        return clean;
      }

      std::optional<std::size_t> find_non_multiple(std::size_t t) const {
        for (std::size_t i = t + 1; i < _m.rows(); ++i) {
          for (std::size_t j = t + 1; j < _m.cols(); ++j) {
            if (_m(i, j) % _m(t, t) != 0) {
              return i;
            }
          }
        }
        return std::nullopt;
      }

      // row[dst] += k * row[src] (in M and U)
      void add_row(std::size_t dst, std::size_t src, BigInt const& k) {
        for (std::size_t j = 0; j < _m.cols(); ++j) {
          _m(dst, j) += k * _m(src, j);
        }
        for (std::size_t j = 0; j < _u.cols(); ++j) {
          _u(dst, j) += k * _u(src, j);
        }
      }

      // col[dst] += k * col[src] (in M and V)
      void add_col(std::size_t dst, std::size_t src, BigInt const& k) {
        for (std::size_t i = 0; i < _m.rows(); ++i) {
          _m(i, dst) += k * _m(i, src);
        }
        for (std::size_t i = 0; i < _v.rows(); ++i) {
          _v(i, dst) += k * _v(i, src);
        }
      }

      void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
          return;
        }
        for (std::size_t j = 0; j < _m.cols(); ++j) {
          std::swap(_m(a, j), _m(b, j));
        }
        for (std::size_t j = 0; j < _u.cols(); ++j) {
          std::swap(_u(a, j), _u(b, j));
        }
      }

      void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) {
          return;
        }
        for (std::size_t i = 0; i < _m.rows(); ++i) {
          std::swap(_m(i, a), _m(i, b));
        }
        for (std::size_t i = 0; i < _v.rows(); ++i) {
          std::swap(_v(i, a), _v(i, b));
        }
      }

      void negate_row(std::size_t t) {
        for (std::size_t j = 0; j < _m.cols(); ++j) {
          _m(t, j) = -_m(t, j);
        }
        for (std::size_t j = 0; j < _u.cols(); ++j) {
          _u(t, j) = -_u(t, j);
        }
      }

      IntegerMatrix _m;
      IntegerMatrix _u;
      IntegerMatrix _v;
    };

  }  // namespace

  SmithForm smith_normal_form(IntegerMatrix const& a) {
    return SmithReducer(a).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianGroup / Cokernel
  ////////////////////////////////////////////////////////////////////////

  BigInt AbelianGroup::order() const {
    if (free_rank > 0) {
      return 0;
    }
    BigInt n = 1;
    for (auto const& d : torsion) {
      n *= d;
    }
    return n;
  }

  std::string AbelianGroup::to_string() const {
    if (is_trivial()) {
      return "0";
    }
    std::string out;
    for (auto const& d : torsion) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + d.str();
    }
    if (free_rank > 0) {
      if (!out.empty()) {
        out += " + ";
      }
      out += free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank);
    }
    return out;
  }

  Cokernel::Cokernel(IntegerMatrix const& a) {
    SmithForm snf = smith_normal_form(a);
    _left         = std::move(snf.left);
    _diag.assign(a.rows(), BigInt(0));
    for (std::size_t i = 0; i < snf.factors.size(); ++i) {
      _diag[i] = snf.factors[i];
      if (snf.factors[i] > 1) {
        _group.torsion.push_back(snf.factors[i]);
      }
    }
    _group.free_rank = a.rows() - snf.factors.size();
  }

  std::vector<BigInt> Cokernel::reduce(std::vector<BigInt> const& v) const {
    std::vector<BigInt> w = _left * v;
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (_diag[i] == 1) {
        continue;
      }
      if (_diag[i] > 1) {
        BigInt r = w[i] % _diag[i];
        if (r < 0) {
          r += _diag[i];
        }
        out.push_back(r);
      }
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (_diag[i] == 0) {
        out.push_back(w[i]);
      }
    }
    return out;
  }

}  // namespace repchar
