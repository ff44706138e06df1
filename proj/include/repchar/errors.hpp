//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_ERRORS_HPP_
#define REPCHAR_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace repchar {

  // Bad input: malformed data, violated preconditions, unsupported
  // requests. The CLI maps this to exit status 1.
  class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An internal invariant failed (for example d^2 != 0 on a complex the
  // library constructed itself). The CLI maps this to exit status 2.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace repchar

#endif  // REPCHAR_ERRORS_HPP_
