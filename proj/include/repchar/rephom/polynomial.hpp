//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_REPHOM_POLYNOMIAL_HPP_
#define REPCHAR_REPHOM_POLYNOMIAL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repchar/exactlin/rational.hpp"

namespace repchar {

  // Sparse polynomial over Q in a fixed number of variables.
  class Polynomial {
   public:
    using Monomial = std::vector<std::uint32_t>;

    explicit Polynomial(std::size_t variables = 0) : _variables(variables) {}

    static Polynomial constant(std::size_t variables, Rational const& c);
    static Polynomial variable(std::size_t variables, std::size_t i);

    std::size_t num_variables() const noexcept {
      return _variables;
    }
    std::map<Monomial, Rational> const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Polynomial operator+(Polynomial const& o) const;
    Polynomial operator-(Polynomial const& o) const;
    Polynomial operator*(Polynomial const& o) const;

    Rational evaluate(std::vector<Rational> const& point) const;

    // Terms by decreasing total degree, then decreasing exponents.
    std::string to_string(std::vector<std::string> const& names) const;

    friend bool operator==(Polynomial const&, Polynomial const&) = default;

   private:
    void add_term(Monomial const& m, Rational const& c);

    std::size_t                  _variables;
    std::map<Monomial, Rational> _terms;
  };

}  // namespace repchar

#endif  // REPCHAR_REPHOM_POLYNOMIAL_HPP_
