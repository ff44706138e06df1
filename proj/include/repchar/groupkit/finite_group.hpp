//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_GROUPKIT_FINITE_GROUP_HPP_
#define REPCHAR_GROUPKIT_FINITE_GROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/integer_matrix.hpp"
#include "repchar/groupkit/free_group.hpp"

namespace repchar {

  // Finitely presented group <x_0..x_{rank-1} | relators>.
  struct GroupPresentation {
    std::size_t           rank = 0;
    std::vector<FreeWord> relators;

    // rank x #relators matrix of exponent sums; its cokernel is the
    // abelianization.
    IntegerMatrix relator_matrix() const;
    AbelianGroup  abelianization() const;
  };

  // A finite group given by its multiplication table. Elements are indices
  // 0..order()-1.
  class FiniteGroup {
   public:
    using element = std::size_t;

    FiniteGroup() = default;
    // Throws ValidationError if the table is not a group; the message names
    // the first failing axiom and elements.
    FiniteGroup(std::vector<std::string>          labels,
                std::vector<std::vector<element>> table,
                element                           identity);

    // Returns a description of the first failing group axiom, if any.
    static std::optional<std::string> check_axioms(std::vector<std::vector<element>> const& table,
                                                   element identity);

    // Todd-Coxeter coset enumeration. Throws ValidationError if more than
    // max_cosets cosets are needed, which is how infinite groups are
    // rejected.
    static FiniteGroup from_presentation(GroupPresentation const& p, std::size_t max_cosets = 20000);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);
    static FiniteGroup quaternion();
    static FiniteGroup dihedral(std::size_t n);

    std::size_t order() const noexcept {
      return _labels.size();
    }
    element identity() const noexcept {
      return _identity;
    }
    element mul(element a, element b) const {
      return _table[a][b];
    }
    element inv(element a) const {
      return _inverse[a];
    }
    std::string const& label(element a) const {
      return _labels[a];
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::vector<std::vector<element>> const& table() const noexcept {
      return _table;
    }

    // Images of the presentation generators when built from a presentation.
    std::vector<element> const& generator_images() const noexcept {
      return _generators;
    }
    // Evaluates a word at the given images of x_0, x_1, ...
    element evaluate(FreeWord const& w, std::vector<element> const& images) const;
    element evaluate(FreeWord const& w) const {
      return evaluate(w, _generators);
    }

    bool is_abelian() const;

   private:
    std::vector<std::string>          _labels;
    std::vector<std::vector<element>> _table;
    std::vector<element>              _inverse;
    std::vector<element>              _generators;
    element                           _identity = 0;
  };

  // Orbits under conjugation, each sorted, ordered by smallest element.
  std::vector<std::vector<FiniteGroup::element>> conjugacy_classes(FiniteGroup const& g);

  // Index of the conjugacy class of each element, matching conjugacy_classes.
  std::vector<std::size_t> conjugacy_class_index(FiniteGroup const& g);

  // The quotient map onto the abelianization: class[a] is the index of the
  // coset of a modulo the commutator subgroup; cosets are numbered in order
  // of their smallest element, so the identity coset is 0.
  struct Abelianization {
    std::vector<std::size_t> class_of;
    std::size_t              order = 0;
  };
  Abelianization abelianization(FiniteGroup const& g);

}  // namespace repchar

#endif  // REPCHAR_GROUPKIT_FINITE_GROUP_HPP_
