//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/exactlin/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "repchar/errors.hpp"
#include "repchar/exactlin/rational_matrix.hpp"

namespace repchar {

  ////////////////////////////////////////////////////////////////////////
  // Builder
  ////////////////////////////////////////////////////////////////////////

  SparseMatrix::Builder::Builder(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _cols_data(cols) {}

  void SparseMatrix::Builder::add(std::size_t row, std::size_t col, Rational const& value) {
    if (row >= _rows || col >= _cols) {
      throw ValidationError("sparse matrix index out of range");
    }
    if (!value.is_zero()) {
      _cols_data[col].emplace_back(static_cast<std::uint32_t>(row), value);
    }
  }

  void SparseMatrix::Builder::add(std::size_t row, std::size_t col, std::int64_t value) {
    add(row, col, Rational(value));
  }

  SparseMatrix SparseMatrix::Builder::build() && {
    SparseMatrix m(_rows, _cols);
    for (std::size_t c = 0; c < _cols; ++c) {
      auto& raw = _cols_data[c];
      std::stable_sort(raw.begin(), raw.end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
      auto& out = m._columns[c];
      for (std::size_t i = 0; i < raw.size();) {
        std::size_t j   = i;
        Rational    sum = 0;
        while (j < raw.size() && raw[j].first == raw[i].first) {
          sum += raw[j].second;
          ++j;
        }
        if (!sum.is_zero()) {
          out.push_back({raw[i].first, std::move(sum)});
        }
        i = j;
      }
      raw.clear();
      raw.shrink_to_fit();
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // SparseMatrix
  ////////////////////////////////////////////////////////////////////////

  SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _columns(cols) {}

  SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m._columns[i].push_back({static_cast<std::uint32_t>(i), Rational(1)});
    }
    return m;
  }

  SparseMatrix SparseMatrix::from_triplets(std::size_t                 rows,
                                           std::size_t                 cols,
                                           std::vector<Triplet> const& triplets) {
    Builder b(rows, cols);
    for (auto const& t : triplets) {
      b.add(t.row, t.col, t.value);
    }
    return std::move(b).build();
  }

  SparseMatrix SparseMatrix::from_dense(RationalMatrix const& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m(r, c).is_zero()) {
          s._columns[c].push_back({static_cast<std::uint32_t>(r), m(r, c)});
        }
      }
    }
    return s;
  }

  std::size_t SparseMatrix::nnz() const noexcept {
    std::size_t n = 0;
    for (auto const& col : _columns) {
      n += col.size();
    }
    return n;
  }

  Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= _rows || col >= _cols) {
      throw ValidationError("sparse matrix index out of range");
    }
    auto const& c  = _columns[col];
    auto        it = std::lower_bound(c.begin(), c.end(), row, [](Entry const& e, std::size_t r) {
      return e.row < r;
    });
    if (it != c.end() && it->row == row) {
      return it->value;
    }
    return Rational(0);
  }

  SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(_cols, _rows);
    for (std::size_t c = 0; c < _cols; ++c) {
      for (auto const& e : _columns[c]) {
        t._columns[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
      }
    }
    return t;
  }

  SparseMatrix SparseMatrix::operator*(SparseMatrix const& rhs) const {
    if (_cols != rhs._rows) {
      throw ValidationError("dimension mismatch in sparse product");
    }
    SparseMatrix          out(_rows, rhs._cols);
    std::vector<Rational> acc(_rows);
    std::vector<char>     touched(_rows, 0);
    std::vector<uint32_t> pattern;
    for (std::size_t j = 0; j < rhs._cols; ++j) {
      pattern.clear();
      for (auto const& b : rhs._columns[j]) {
        for (auto const& a : _columns[b.row]) {
          if (!touched[a.row]) {
            touched[a.row] = 1;
            pattern.push_back(a.row);
            acc[a.row] = a.value * b.value;
          } else {
            acc[a.row] += a.value * b.value;
          }
        }
      }
      std::sort(pattern.begin(), pattern.end());
      for (auto r : pattern) {
        if (!acc[r].is_zero()) {
          out._columns[j].push_back({r, acc[r]});
        }
        touched[r] = 0;
      }
    }
    return out;
  }

  namespace {
    template <typename Op>
    SparseMatrix combine(SparseMatrix const& a, SparseMatrix const& b, Op op) {
      if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("dimension mismatch in sparse sum");
      }
      SparseMatrix::Builder builder(a.rows(), a.cols());
      for (std::size_t c = 0; c < a.cols(); ++c) {
        for (auto const& e : a.column(c)) {
          builder.add(e.row, c, e.value);
        }
        for (auto const& e : b.column(c)) {
          builder.add(e.row, c, op(e.value));
        }
      }
      return std::move(builder).build();
    }
  }  // namespace

  SparseMatrix SparseMatrix::operator+(SparseMatrix const& rhs) const {
    return combine(*this, rhs, [](Rational const& x) { return x; });
  }

  SparseMatrix SparseMatrix::operator-(SparseMatrix const& rhs) const {
    return combine(*this, rhs, [](Rational const& x) { return -x; });
  }

  SparseMatrix SparseMatrix::scaled(Rational const& factor) const {
    if (factor.is_zero()) {
      return SparseMatrix(_rows, _cols);
    }
    SparseMatrix out = *this;
    for (auto& col : out._columns) {
      for (auto& e : col) {
        e.value *= factor;
      }
    }
    return out;
  }

  SparseMatrix SparseMatrix::column_block(std::size_t first, std::size_t count) const {
    if (first + count > _cols) {
      throw ValidationError("column block out of range");
    }
    SparseMatrix out(_rows, count);
    for (std::size_t c = 0; c < count; ++c) {
      out._columns[c] = _columns[first + c];
    }
    return out;
  }

  RationalMatrix SparseMatrix::to_dense() const {
    RationalMatrix d(_rows, _cols);
    for (std::size_t c = 0; c < _cols; ++c) {
      for (auto const& e : _columns[c]) {
        d(e.row, c) = e.value;
      }
    }
    return d;
  }

  bool operator==(SparseMatrix const& a, SparseMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      return false;
    }
    for (std::size_t c = 0; c < a._cols; ++c) {
      auto const& x = a._columns[c];
      auto const& y = b._columns[c];
      if (x.size() != y.size()) {
        return false;
      }
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].row != y[i].row || x[i].value != y[i].value) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t SparseMatrix::rank() const {
    std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> vectors;
    vectors.reserve(_cols);
    for (auto const& col : _columns) {
      if (col.empty()) {
        continue;
      }
      BigInt lcm = 1;
      for (auto const& e : col) {
        lcm = boost::multiprecision::lcm(lcm, e.value.denominator());
      }
      std::vector<std::pair<std::uint32_t, BigInt>> v;
      v.reserve(col.size());
      for (auto const& e : col) {
        v.emplace_back(e.row, e.value.numerator() * (lcm / e.value.denominator()));
      }
      vectors.push_back(std::move(v));
    }
    return integer_vectors_rank(std::move(vectors), _rows);
  }

  ////////////////////////////////////////////////////////////////////////
  // Fraction-free elimination
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Overflow {};

    // Coefficient arithmetic for the elimination kernel. The int64 flavour
    // throws Overflow instead of wrapping; the caller then reruns with BigInt.
    struct SmallOps {
      using value_type = std::int64_t;
      static value_type mul(value_type a, value_type b) {
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) {
          throw Overflow{};
        }
        return r;
      }
      static value_type sub(value_type a, value_type b) {
        value_type r;
        if (__builtin_sub_overflow(a, b, &r)) {
          throw Overflow{};
        }
        return r;
      }
      static value_type gcd(value_type a, value_type b) {
        return std::gcd(a, b);
      }
      static bool is_unit(value_type a) {
        return a == 1 || a == -1;
      }
    };

    struct BigOps {
      using value_type = BigInt;
      static value_type mul(value_type const& a, value_type const& b) {
        return a * b;
      }
      static value_type sub(value_type const& a, value_type const& b) {
        return a - b;
      }
      static value_type gcd(value_type const& a, value_type const& b) {
        return boost::multiprecision::gcd(a, b);
      }
      static bool is_unit(value_type const& a) {
        return a == 1 || a == -1;
      }
    };

    template <typename Ops>
    using SVec = std::vector<std::pair<std::uint32_t, typename Ops::value_type>>;

    template <typename Ops>
    void divide_content(SVec<Ops>& v) {
      using T = typename Ops::value_type;
      T g     = 0;
      for (auto const& [i, x] : v) {
        g = Ops::gcd(g, x);
        if (Ops::is_unit(g)) {
          return;
        }
      }
      if (g != 0 && !Ops::is_unit(g)) {
        for (auto& [i, x] : v) {
          x /= g;
        }
      }
    }

    // v <- a*v - b*p, where both vectors start at the same index, so the
    // leading entry cancels.
    template <typename Ops>
    void eliminate(SVec<Ops>& v, SVec<Ops> const& p, SVec<Ops>& scratch) {
      using T = typename Ops::value_type;
      T a     = p.front().second;
      T b     = v.front().second;
      T g     = Ops::gcd(a, b);
      a /= g;
      b /= g;
      scratch.clear();
      std::size_t i = 1, j = 1;
      while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
          scratch.emplace_back(v[i].first, Ops::mul(a, v[i].second));
          ++i;
        } else if (i == v.size() || p[j].first < v[i].first) {
          scratch.emplace_back(p[j].first, Ops::sub(T(0), Ops::mul(b, p[j].second)));
          ++j;
        } else {
          T x = Ops::sub(Ops::mul(a, v[i].second), Ops::mul(b, p[j].second));
          if (x != 0) {
            scratch.emplace_back(v[i].first, std::move(x));
          }
          ++i;
          ++j;
        }
      }
      v.swap(scratch);
      divide_content<Ops>(v);
    }

    template <typename Ops>
    std::size_t rank_impl(std::vector<SVec<Ops>> vectors, std::size_t dim) {
      std::stable_sort(vectors.begin(), vectors.end(), [](auto const& x, auto const& y) {
        return x.size() < y.size();
      });
      std::vector<std::int64_t> pivot_of(dim, -1);
      std::vector<SVec<Ops>>    pivots;
      SVec<Ops>                 scratch;
      for (auto& v : vectors) {
        divide_content<Ops>(v);
        while (!v.empty()) {
          auto const lead = v.front().first;
          auto const p    = pivot_of[lead];
          if (p < 0) {
            pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
            pivots.push_back(std::move(v));
            break;
          }
          eliminate<Ops>(v, pivots[p], scratch);
        }
      }
      return pivots.size();
    }

  }  // namespace

  std::size_t
  integer_vectors_rank(std::vector<std::vector<std::pair<std::uint32_t, BigInt>>> vectors,
                       std::size_t                                              dim) {
    for (auto& v : vectors) {
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      for (auto const& [i, x] : v) {
        if (i >= dim) {
          throw ValidationError("vector index out of range");
        }
      }
      std::erase_if(v, [](auto const& e) { return e.second == 0; });
    }
    bool fits = true;
    for (auto const& v : vectors) {
      for (auto const& [i, x] : v) {
        if (x > BigInt(1) << 40 || x < -(BigInt(1) << 40)) {
          fits = false;
        }
      }
    }
    if (fits) {
      std::vector<SVec<SmallOps>> small;
      small.reserve(vectors.size());
      for (auto const& v : vectors) {
        SVec<SmallOps> s;
        s.reserve(v.size());
        for (auto const& [i, x] : v) {
          s.emplace_back(i, static_cast<std::int64_t>(x));
        }
        small.push_back(std::move(s));
      }
      try {
        return rank_impl<SmallOps>(std::move(small), dim);
      } catch (Overflow const&) {
        // fall through to the arbitrary-precision path
      }
    }
    return rank_impl<BigOps>(std::move(vectors), dim);
  }

}  // namespace repchar
