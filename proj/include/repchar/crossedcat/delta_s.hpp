//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_CROSSEDCAT_DELTA_S_HPP_
#define REPCHAR_CROSSEDCAT_DELTA_S_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repchar/exactlin/integer_matrix.hpp"
#include "repchar/groupkit/free_group.hpp"

namespace repchar {

  // A morphism [n] -> [m] of the symmetric category, written as a tensor
  // X_0 | X_1 | ... | X_m of noncommutative monomials in x_0, ..., x_n in
  // which every variable occurs exactly once.
  class DeltaSMorphism {
   public:
    using Monomial = std::vector<std::uint32_t>;

    DeltaSMorphism() = default;
    // Throws ValidationError unless the monomials partition {0, ..., n}.
    DeltaSMorphism(std::size_t n, std::vector<Monomial> monomials);

    static DeltaSMorphism identity(std::size_t n);

    // Parses "x1x0|x3x4|1|x2"; the source is inferred from the variables.
    static DeltaSMorphism parse(std::string_view text);

    std::size_t source() const noexcept {
      return _n;
    }
    std::size_t target() const noexcept {
      return _monomials.size() - 1;
    }
    std::vector<Monomial> const& monomials() const noexcept {
      return _monomials;
    }
    Monomial const& monomial(std::size_t j) const {
      return _monomials.at(j);
    }

    // The variables in the order X_0 X_1 ... X_m.
    std::vector<std::uint32_t> concatenation() const;

    std::string to_string() const;

    friend bool operator==(DeltaSMorphism const&, DeltaSMorphism const&) = default;
    friend auto operator<=>(DeltaSMorphism const&, DeltaSMorphism const&) = default;

   private:
    std::size_t           _n = 0;
    std::vector<Monomial> _monomials{{0}};
  };

  // f1 o f2: each x_k in f1 is replaced by the k-th monomial of f2.
  DeltaSMorphism compose_deltaS(DeltaSMorphism const& f1, DeltaSMorphism const& f2);

  // f = g o sigma with g monotone and sigma a permutation of {0, ..., n}.
  struct SimplicialFactorization {
    std::vector<std::size_t> g;      // g(0) <= ... <= g(n), values in [m]
    std::vector<std::size_t> sigma;  // sigma(i) = position of x_i in X_0 ... X_m
    std::size_t              target = 0;
  };

  SimplicialFactorization factorize_sym(DeltaSMorphism const& f);

  // The monotone map as a morphism: X_j = product of the x_p with g(p) = j.
  DeltaSMorphism monotone_morphism(std::vector<std::size_t> const& g, std::size_t target);
  // The automorphism of [n] with p-th monomial x_{sigma^-1(p)}.
  DeltaSMorphism permutation_morphism(std::vector<std::size_t> const& sigma);
  // g o sigma.
  DeltaSMorphism recompose(SimplicialFactorization const& fac);

  // Free group homomorphism <m+1> -> <n+1> sending the j-th generator to the
  // j-th monomial.
  GroupHom psi_sym(DeltaSMorphism const& f);

  // (n+1) x (m+1) matrix with entry (i, j) = 1 iff x_i occurs in X_j.
  IntegerMatrix abelianize_psi_sym(DeltaSMorphism const& f);

  // Object (<n>; k_1, ..., k_n) of the decorated category of free groups.
  struct DecoratedObject {
    std::size_t              arity = 0;
    std::vector<std::int64_t> decoration;

    friend bool operator==(DecoratedObject const&, DecoratedObject const&) = default;
  };

  struct DecoratedHom {
    GroupHom        hom;     // psi_sym(f): <m+1> -> <n+1>
    DecoratedObject source;  // (<m+1>; k, ..., k)
    DecoratedObject target;  // (<n+1>; k, ..., k)
  };

  // The lift of psi_sym(f) with constant decoration k. Throws
  // InvariantViolation if the abelianized map does not carry the source
  // decoration to the target decoration.
  DecoratedHom psi_tilde_sym(DeltaSMorphism const& f, std::int64_t k);

  // Number of morphisms [n] -> [m]: (n+1)! * C(n+m+1, m).
  std::size_t hom_count(std::size_t n, std::size_t m);

  // Enumeration of Hom([n], [m]) compatible with rank_morphism/unrank_morphism.
  DeltaSMorphism unrank_morphism(std::size_t n, std::size_t m, std::size_t rank);
  std::size_t    rank_morphism(DeltaSMorphism const& f);
  std::vector<DeltaSMorphism> all_morphisms(std::size_t n, std::size_t m);

}  // namespace repchar

#endif  // REPCHAR_CROSSEDCAT_DELTA_S_HPP_
