//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_CROSSEDCAT_CYCLIC_HPP_
#define REPCHAR_CROSSEDCAT_CYCLIC_HPP_

#include <cstddef>

#include "repchar/crossedcat/delta_s.hpp"
#include "repchar/groupkit/cyclic_bar.hpp"

namespace repchar {

  // The embedding of the opposite cyclic category into the symmetric one,
  // on generators and on composable words.
  DeltaSMorphism iota(CyclicGenerator const& gen);
  DeltaSMorphism iota(CyclicWord const& w);

  // The functor from the cyclic category to free groups, on generators and
  // on composable words.
  GroupHom psi_cyc(CyclicGenerator const& gen);
  GroupHom psi_cyc(CyclicWord const& w);

  // Default arity bound of the generator-closure tables.
  inline constexpr std::size_t cyclic_table_bound = 4;

  // Membership in the image of iota. For source and target <= bound this is
  // decided by the closure of generator images (computed once per bound and
  // cached); beyond it by cyclic_by_rotation, which the test suite checks
  // against the closure tables.
  bool is_cyclic(DeltaSMorphism const& f, std::size_t bound = cyclic_table_bound);

  // Closure-table lookup only; throws ValidationError beyond the bound.
  bool is_cyclic_by_closure(DeltaSMorphism const& f, std::size_t bound);

  // True iff X_0 X_1 ... X_m is a cyclic rotation of x_0 x_1 ... x_n.
  bool cyclic_by_rotation(DeltaSMorphism const& f);

  // Number of cyclic morphisms [n] -> [m] in the closure tables.
  std::size_t cyclic_closure_count(std::size_t n, std::size_t m, std::size_t bound);

}  // namespace repchar

#endif  // REPCHAR_CROSSEDCAT_CYCLIC_HPP_
