//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_CROSSEDCAT_SUITES_HPP_
#define REPCHAR_CROSSEDCAT_SUITES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace repchar {

  struct SuiteResult {
    std::string name;
    std::size_t checked  = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept {
      return failures == 0 && checked > 0;
    }
  };

  struct CrossedSuiteOptions {
    // Arity bound for exhaustive enumeration, at most 4. Associativity is
    // exhaustive up to min(exhaustive_bound, 3) because its composition
    // tables grow too fast beyond that.
    std::size_t   exhaustive_bound = 3;
    std::size_t   random_bound     = 6;
    std::size_t   random_samples   = 2000;
    std::uint64_t seed             = 1;
  };

  // The six structural suites of the symmetric and cyclic categories:
  // associativity, unique factorization, automorphism counts, the square
  // psi_sym o iota = psi_cyc, the row property of abelianized matrices, and
  // the lifting square for decorated free groups.
  std::vector<SuiteResult> run_crossed_suites(CrossedSuiteOptions const& opts);

  // Exhaustive associativity via ranked composition tables for arities <= bound.
  SuiteResult exhaustive_associativity(std::size_t bound);

}  // namespace repchar

#endif  // REPCHAR_CROSSEDCAT_SUITES_HPP_
