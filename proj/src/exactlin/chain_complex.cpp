//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/exactlin/chain_complex.hpp"

#include <utility>

#include "repchar/errors.hpp"
#include "repchar/parallel.hpp"

namespace repchar {

  ChainComplex::ChainComplex(std::vector<std::size_t> dims)
      : _dims(std::move(dims)), _diff(_dims.size()), _labels(_dims.size()) {
    for (std::size_t q = 0; q < _dims.size(); ++q) {
      _diff[q] = SparseMatrix(q == 0 ? 0 : _dims[q - 1], _dims[q]);
    }
  }

  SparseMatrix ChainComplex::differential(std::size_t q) const {
    if (q == 0) {
      return SparseMatrix(0, dim(0));
    }
    if (q > top_degree() || _dims.empty()) {
      return SparseMatrix(dim(q - 1), 0);
    }
    return _diff[q];
  }

  void ChainComplex::set_differential(std::size_t q, SparseMatrix d) {
    if (q == 0 || q > top_degree()) {
      throw ValidationError("differential degree out of range");
    }
    if (d.rows() != _dims[q - 1] || d.cols() != _dims[q]) {
      throw ValidationError("differential d_" + std::to_string(q) + " has shape "
                            + std::to_string(d.rows()) + "x" + std::to_string(d.cols())
                            + ", expected " + std::to_string(_dims[q - 1]) + "x"
                            + std::to_string(_dims[q]));
    }
    _diff[q] = std::move(d);
  }

  void ChainComplex::set_labels(std::size_t q, std::vector<std::string> labels) {
    if (q > top_degree() || labels.size() != _dims[q]) {
      throw ValidationError("label list does not match basis size");
    }
    _labels[q] = std::move(labels);
  }

  std::vector<std::string> const* ChainComplex::labels(std::size_t q) const {
    if (q >= _labels.size() || !_labels[q]) {
      return nullptr;
    }
    return &*_labels[q];
  }

  std::optional<std::size_t> ChainComplex::first_d_squared_failure() const {
    for (std::size_t q = 2; q <= top_degree(); ++q) {
      if (!(_diff[q - 1] * _diff[q]).is_zero()) {
        return q;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> homology_dims(ChainComplex const& c) {
    if (auto bad = c.first_d_squared_failure()) {
      throw InvariantViolation("d_" + std::to_string(*bad - 1) + " d_" + std::to_string(*bad)
                               + " != 0");
    }
    std::size_t const        n = c.num_degrees();
    std::vector<std::size_t> ranks(n + 1, 0);
    parallel_for(1, n, [&](std::size_t q) { ranks[q] = c.differential(q).rank(); });
    std::vector<std::size_t> out(n);
    for (std::size_t q = 0; q < n; ++q) {
      out[q] = c.dim(q) - ranks[q] - ranks[q + 1];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Integer complexes
  ////////////////////////////////////////////////////////////////////////

  IntegerMatrix IntegerChainComplex::differential(std::size_t q) const {
    auto rank_at = [this](std::size_t i) { return i < ranks.size() ? ranks[i] : 0; };
    if (q == 0) {
      return IntegerMatrix(0, rank_at(0));
    }
    if (q >= ranks.size() || q >= differentials.size()) {
      return IntegerMatrix(rank_at(q - 1), rank_at(q));
    }
    return differentials[q];
  }

  std::vector<AbelianGroup> homology_of_integer_complex(IntegerChainComplex const& c) {
    std::size_t const n = c.ranks.size();
    for (std::size_t q = 1; q < n; ++q) {
      auto const d = c.differential(q);
      if (d.rows() != c.ranks[q - 1] || d.cols() != c.ranks[q]) {
        throw ValidationError("integer differential d_" + std::to_string(q) + " has wrong shape");
      }
      if (q >= 2 && !(c.differential(q - 1) * d).is_zero()) {
        throw InvariantViolation("d_" + std::to_string(q - 1) + " d_" + std::to_string(q)
                                 + " != 0 over Z");
      }
    }
    std::vector<SmithForm> snf(n + 1);
    parallel_for(1, n, [&](std::size_t q) { snf[q] = smith_normal_form(c.differential(q)); });
    std::vector<AbelianGroup> out(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t const rank_out = q >= 1 ? snf[q].factors.size() : 0;
      std::size_t const rank_in  = q + 1 < n ? snf[q + 1].factors.size() : 0;
      out[q].free_rank           = c.ranks[q] - rank_out - rank_in;
      if (q + 1 < n) {
        for (auto const& d : snf[q + 1].factors) {
          if (d > 1) {
            out[q].torsion.push_back(d);
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Explicit homology bases and induced maps
  ////////////////////////////////////////////////////////////////////////

  std::vector<Rational> HomologyBasis::coordinates(std::vector<Rational> const& z) const {
    std::size_t const               nb = boundaries.cols();
    std::size_t const               nh = representatives.cols();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t j = 0; j < nb; ++j) {
      cols.push_back(boundaries.column(j));
    }
    for (std::size_t j = 0; j < nh; ++j) {
      cols.push_back(representatives.column(j));
    }
    auto const system = RationalMatrix::from_columns(z.size(), cols);
    auto const x      = system.solve(z);
    if (!x) {
      throw ValidationError("vector is not a cycle");
    }
    return std::vector<Rational>(x->begin() + static_cast<std::ptrdiff_t>(nb), x->end());
  }

  HomologyBasis homology_basis(ChainComplex const& c, std::size_t q) {
    std::size_t const n = c.dim(q);
    RationalMatrix    cycles;
    if (q == 0) {
      cycles = RationalMatrix::identity(n);
    } else {
      cycles = c.differential(q).to_dense().kernel();
    }
    // Independent columns of d_{q+1} span the boundaries.
    RationalMatrix bd;
    if (q + 1 <= c.top_degree()) {
      RationalMatrix d    = c.differential(q + 1).to_dense();
      RationalMatrix copy = d;
      auto const     piv  = copy.rref();
      std::vector<std::vector<Rational>> cols;
      for (auto p : piv) {
        cols.push_back(d.column(p));
      }
      bd = RationalMatrix::from_columns(n, cols);
    } else {
      bd = RationalMatrix(n, 0);
    }
    // Extend the boundary basis by cycles to a basis of Z_q.
    std::vector<std::vector<Rational>> span;
    for (std::size_t j = 0; j < bd.cols(); ++j) {
      span.push_back(bd.column(j));
    }
    std::vector<std::vector<Rational>> reps;
    std::size_t                        current = span.size();
    for (std::size_t j = 0; j < cycles.cols(); ++j) {
      span.push_back(cycles.column(j));
      std::size_t const r = RationalMatrix::from_columns(n, span).rank();
      if (r > current) {
        reps.push_back(cycles.column(j));
        current = r;
      } else {
        span.pop_back();
      }
    }
    return HomologyBasis{RationalMatrix::from_columns(n, reps), bd};
  }

  bool is_chain_map(ChainComplex const& source, ChainComplex const& target, ChainMap const& f) {
    std::size_t const top = std::min(source.top_degree(), target.top_degree());
    if (f.components.size() < top + 1) {
      return false;
    }
    for (std::size_t q = 0; q <= top; ++q) {
      auto const& fq = f.components[q];
      if (fq.rows() != target.dim(q) || fq.cols() != source.dim(q)) {
        return false;
      }
      if (q >= 1) {
        if (target.differential(q) * fq != f.components[q - 1] * source.differential(q)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<RationalMatrix> induced_map_on_homology(ChainComplex const& source,
                                                      ChainComplex const& target,
                                                      ChainMap const&     f) {
    if (!is_chain_map(source, target, f)) {
      throw ValidationError("map does not commute with the differentials");
    }
    std::size_t const           top = std::min(source.top_degree(), target.top_degree());
    std::vector<RationalMatrix> out;
    for (std::size_t q = 0; q <= top; ++q) {
      auto const     hs = homology_basis(source, q);
      auto const     ht = homology_basis(target, q);
      auto const     fq = f.components[q].to_dense();
      RationalMatrix m(ht.representatives.cols(), hs.representatives.cols());
      for (std::size_t j = 0; j < hs.representatives.cols(); ++j) {
        RationalMatrix col(hs.representatives.rows(), 1);
        for (std::size_t i = 0; i < col.rows(); ++i) {
          col(i, 0) = hs.representatives(i, j);
        }
        auto const image  = (fq * col).column(0);
        auto const coords = ht.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i) {
          m(i, j) = coords[i];
        }
      }
      out.push_back(std::move(m));
    }
    return out;
  }

}  // namespace repchar
