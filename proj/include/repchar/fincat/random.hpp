//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_FINCAT_RANDOM_HPP_
#define REPCHAR_FINCAT_RANDOM_HPP_

#include <cstddef>
#include <random>

#include "repchar/fincat/category.hpp"
#include "repchar/fincat/functor.hpp"

namespace repchar {

  // Seeded generators for property tests. All draws use rng() % k so that
  // outputs are identical across standard libraries.

  // Transitive closure of random relations i < j on 0..objects-1.
  FinCategory random_poset(std::mt19937_64& rng, std::size_t objects);

  // A covariant set functor on a poset with all sets of size <= max_size.
  // F(c) is U_c modulo E_c, where U_c grows and E_c coarsens along the order.
  SetFunctor random_poset_set_functor(std::mt19937_64& rng, FinCategory const& poset, std::size_t max_size);

  // A contravariant module functor on a poset: a linearized random
  // contravariant set functor conjugated by random invertible diagonals.
  ModuleFunctor random_poset_module(std::mt19937_64& rng, FinCategory const& poset, std::size_t max_dim);

}  // namespace repchar

#endif  // REPCHAR_FINCAT_RANDOM_HPP_
