//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_CYCHOM_CYCLIC_HOMOLOGY_HPP_
#define REPCHAR_CYCHOM_CYCLIC_HOMOLOGY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/exactlin/sparse_matrix.hpp"
#include "repchar/groupkit/finite_group.hpp"

namespace repchar {

  // Dimensions indexed by degree.
  using GradedDims = std::vector<std::size_t>;

  struct CyclicModuleOptions {
    // Keep only tuples whose product lies in this conjugacy class (indexed
    // as in conjugacy_classes). Every operator preserves the class, so this
    // is a direct summand.
    std::optional<std::size_t> conjugacy_class;
    // Quotient by the constant tuples (e, ..., e).
    bool reduced = false;
  };

  // The standard cyclic module of Q[G] in degrees 0..top. Level q has basis
  // the tuples of G^{q+1} that pass the options, in increasing order of
  // their CyclicBar code. With d_i the faces of the cyclic bar construction
  // and t the signed rotation (-1)^q tau_q:
  //   b = sum_{i=0}^{q} (-1)^i d_i,  b' = sum_{i=0}^{q-1} (-1)^i d_i,
  //   N = 1 + t + ... + t^q.
  struct CyclicModule {
    std::size_t                           top = 0;
    std::vector<std::vector<std::size_t>> basis;        // tuple codes per level
    std::vector<SparseMatrix>             b;            // b[q]: C_q -> C_{q-1}; b[0] is 0 x dim C_0
    std::vector<SparseMatrix>             b_prime;      // same shapes as b
    std::vector<SparseMatrix>             one_minus_t;  // C_q -> C_q
    std::vector<SparseMatrix>             norm;         // C_q -> C_q

    std::size_t dim(std::size_t q) const {
      return basis.at(q).size();
    }

    // b^2 = 0, b'^2 = 0, (1-t)N = N(1-t) = 0, b(1-t) = (1-t)b', b'N = Nb.
    std::optional<std::string> check_identities() const;
  };

  CyclicModule build_cyclic_module(FiniteGroup const& g, std::size_t top, CyclicModuleOptions const& opts = {});

  // Total complex of the cyclic bicomplex in degrees 0..top: column p holds
  // C_{n-p} in total degree n, with vertical b on even and -b' on odd
  // columns, and horizontal 1 - t (odd to even) and N (even to odd).
  // Needs m.top >= top. Blocks are ordered by increasing column.
  ChainComplex cyclic_total_complex(CyclicModule const& m, std::size_t top);

  // dim HC_0 .. dim HC_bound of Q[G], summed over conjugacy classes.
  GradedDims hc_dims(FiniteGroup const& g, std::size_t bound);

  // HC of Q[G] modulo the copy of Q coming from the constant tuples.
  GradedDims reduced_hc_dims(FiniteGroup const& g, std::size_t bound);

  // HC_0(Q[G]) = Q<conjugacy classes>: one representative per class, and
  // the class of each group element (the surjection from degree-0 cycles).
  struct Hc0Basis {
    std::vector<FiniteGroup::element> representatives;
    std::vector<std::size_t>          class_of;
  };

  Hc0Basis hc0_basis(FiniteGroup const& g);

}  // namespace repchar

#endif  // REPCHAR_CYCHOM_CYCLIC_HOMOLOGY_HPP_
