//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_PARALLEL_HPP_
#define REPCHAR_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace repchar {

  // Worker count from REPCHAR_THREADS (default 1).
  std::size_t thread_budget();

  // Calls body(i) for i in [first, last). Each index writes only its own
  // output slot, so results do not depend on scheduling.
  void parallel_for(std::size_t first, std::size_t last, std::function<void(std::size_t)> const& body);

}  // namespace repchar

#endif  // REPCHAR_PARALLEL_HPP_
