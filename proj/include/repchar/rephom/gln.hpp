//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_REPHOM_GLN_HPP_
#define REPCHAR_REPHOM_GLN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "repchar/groupkit/finite_group.hpp"
#include "repchar/rephom/polynomial.hpp"

namespace repchar {

  // Symbolic presentation of O[Rep_n(Gamma)] for Gamma = <x_0, ... | R>:
  // the polynomial ring in the entries of one n x n matrix X_i per
  // generator and a symbol d_i = det(X_i)^{-1}, localized by
  // det(X_i) d_i - 1, modulo the entries of w(X) - I for each relator w.
  // Inverse letters are written as adj(X_i) d_i.
  struct GlnPresentation {
    std::size_t              n          = 1;
    std::size_t              generators = 0;
    std::vector<std::string> variables;     // x<i>_<r><c> (1-based), then d<i>
    std::vector<Polynomial>  localization;  // one per generator
    std::vector<Polynomial>  ideal;         // n^2 per relator, row-major

    std::size_t entry_variable(std::size_t generator, std::size_t r, std::size_t c) const {
      return generator * n * n + r * n + c;
    }
    std::size_t inverse_variable(std::size_t generator) const {
      return generators * n * n + generator;
    }

    std::string to_string() const;
  };

  // The generic matrix w(X), row-major, in the variables of g. Throws
  // ValidationError if w uses a generator beyond g.generators.
  std::vector<Polynomial> word_matrix(GlnPresentation const& g, FreeWord const& w);

  // Requires 1 <= n <= 9.
  GlnPresentation rep_ring_gln_degree0(GroupPresentation const& p, std::size_t n);

}  // namespace repchar

#endif  // REPCHAR_REPHOM_GLN_HPP_
