//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_EXACTLIN_CHAIN_COMPLEX_HPP_
#define REPCHAR_EXACTLIN_CHAIN_COMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/integer_matrix.hpp"
#include "repchar/exactlin/rational_matrix.hpp"
#include "repchar/exactlin/sparse_matrix.hpp"

namespace repchar {

  // Bounded chain complex C_0 <- C_1 <- ... <- C_top over Q. d_q maps
  // degree q to degree q - 1 and is stored as a dims[q-1] x dims[q] matrix.
  class ChainComplex {
   public:
    ChainComplex() = default;
    explicit ChainComplex(std::vector<std::size_t> dims);

    std::size_t top_degree() const noexcept {
      return _dims.empty() ? 0 : _dims.size() - 1;
    }
    std::size_t num_degrees() const noexcept {
      return _dims.size();
    }
    std::size_t dim(std::size_t q) const {
      return q < _dims.size() ? _dims[q] : 0;
    }
    std::vector<std::size_t> const& dims() const noexcept {
      return _dims;
    }

    // d_q; the zero map when q == 0 or q > top_degree().
    SparseMatrix differential(std::size_t q) const;
    void         set_differential(std::size_t q, SparseMatrix d);

    // Optional opaque basis labels, one list per degree.
    void set_labels(std::size_t q, std::vector<std::string> labels);
    std::vector<std::string> const* labels(std::size_t q) const;

    // Smallest q with d_{q-1} d_q != 0, if any.
    std::optional<std::size_t> first_d_squared_failure() const;

   private:
    std::vector<std::size_t>                            _dims;
    std::vector<SparseMatrix>                           _diff;
    std::vector<std::optional<std::vector<std::string>>> _labels;
  };

  // dim H_q for q = 0..top. Throws InvariantViolation if d^2 != 0.
  std::vector<std::size_t> homology_dims(ChainComplex const& c);

  // Bounded complex of free abelian groups.
  struct IntegerChainComplex {
    std::vector<std::size_t>   ranks;
    std::vector<IntegerMatrix> differentials;  // differentials[q] = d_q, q >= 1

    IntegerMatrix differential(std::size_t q) const;
  };

  std::vector<AbelianGroup> homology_of_integer_complex(IntegerChainComplex const& c);

  // Explicit homology basis in one degree: cycle representatives (as columns)
  // plus a basis of the boundaries, used to read off coordinates.
  struct HomologyBasis {
    RationalMatrix representatives;  // dim C_q x dim H_q
    RationalMatrix boundaries;       // dim C_q x rank d_{q+1}

    // Coordinates of the class of a cycle z in terms of the representatives.
    std::vector<Rational> coordinates(std::vector<Rational> const& z) const;
  };

  HomologyBasis homology_basis(ChainComplex const& c, std::size_t q);

  // A family of maps f_q : source_q -> target_q.
  struct ChainMap {
    std::vector<SparseMatrix> components;
  };

  // Matrices of H_q(f) in the bases returned by homology_basis, for all q up
  // to the smaller top degree. Throws ValidationError if f is not a chain map.
  std::vector<RationalMatrix> induced_map_on_homology(ChainComplex const& source,
                                                      ChainComplex const& target,
                                                      ChainMap const&     f);

  bool is_chain_map(ChainComplex const& source, ChainComplex const& target, ChainMap const& f);

}  // namespace repchar

#endif  // REPCHAR_EXACTLIN_CHAIN_COMPLEX_HPP_
