//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_FINCAT_TOR_HPP_
#define REPCHAR_FINCAT_TOR_HPP_

#include <cstddef>
#include <vector>

#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/fincat/category.hpp"
#include "repchar/fincat/functor.hpp"

namespace repchar {

  // A string c_0 -> c_1 -> ... -> c_p of composable non-identity morphisms.
  // For p = 0 the chain is the object `start`.
  struct NerveChain {
    std::size_t              start = 0;
    std::size_t              end   = 0;
    std::vector<std::size_t> morphisms;  // f_1, ..., f_p
  };

  // Nondegenerate chains of lengths 0..max_length, in a fixed order: level
  // p + 1 extends each level-p chain by the non-identity morphisms out of
  // its end.
  std::vector<std::vector<NerveChain>> nerve_chains(FinCategory const& c, std::size_t max_length);

  // Normalized rational chains on the nerve, degrees 0..top.
  ChainComplex nerve(FinCategory const& c, std::size_t top);

  // dim H_0 .. dim H_bound of the nerve.
  std::vector<std::size_t> nerve_homology_dims(FinCategory const& c, std::size_t bound);

  // Normalized two-sided bar complex B(N, C, M), degrees 0..top. The degree-p
  // basis is indexed by (chain, a, b) with a a basis vector of N(c_p) and b
  // of M(c_0), ordered by chain, then a, then b. N must be contravariant
  // and M covariant.
  ChainComplex bar_complex(FinCategory const& c, ModuleFunctor const& n, ModuleFunctor const& m,
                           std::size_t top);

  struct TensorBasisElement {
    std::size_t object;
    std::size_t n_index;
    std::size_t m_index;
  };

  // N (x)_C M. The basis consists of classes of elementary tensors.
  struct TensorProduct {
    std::size_t                     dimension = 0;
    std::vector<TensorBasisElement> basis;
  };

  TensorProduct functor_tensor_product(FinCategory const& c, ModuleFunctor const& n,
                                       ModuleFunctor const& m);

  // dim Tor_0 .. dim Tor_bound.
  std::vector<std::size_t> tor_dims(FinCategory const& c, ModuleFunctor const& n, ModuleFunctor const& m,
                                    std::size_t bound);

  // Tor over the category of elements C_F of (p^* X, k) against Tor over C
  // of (X, k[F]), with X contravariant.
  struct ShapiroResult {
    bool                     agree = false;
    std::vector<std::size_t> over_elements;
    std::vector<std::size_t> over_base;
  };

  ShapiroResult shapiro_check(FinCategory const& c, SetFunctor const& f, ModuleFunctor const& x,
                              std::size_t bound);

  // The map Tor^D(f^* N, f^* M) -> Tor^C(N, M) induced by f: D -> C.
  struct RestrictedTor {
    std::vector<std::size_t>    source_dims;
    std::vector<std::size_t>    target_dims;
    std::vector<RationalMatrix> induced;  // degrees 0..bound
  };

  RestrictedTor restrict_tor(FinCategory const& source, FinCategory const& target, FinFunctor const& f,
                             ModuleFunctor const& n, ModuleFunctor const& m, std::size_t bound);

  // Homology of the nerve of C∫F against the total complex of the bicomplex
  // B_p(k, C, N_q F(-)) with D = d_h + (-1)^p d_v.
  struct ThomasonResult {
    bool                     agree = false;
    std::vector<std::size_t> nerve_side;
    std::vector<std::size_t> bicomplex_side;
  };

  ThomasonResult thomason_check(FinCategory const& c, CatDiagram const& d, std::size_t bound);

}  // namespace repchar

#endif  // REPCHAR_FINCAT_TOR_HPP_
