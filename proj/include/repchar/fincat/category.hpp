//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_FINCAT_CATEGORY_HPP_
#define REPCHAR_FINCAT_CATEGORY_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "repchar/groupkit/finite_group.hpp"

namespace repchar {

  // A finite category. Morphisms are indices; compose(g, f) is g o f and is
  // defined exactly when target(f) == source(g).
  class FinCategory {
   public:
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    struct Morphism {
      std::size_t source = 0;
      std::size_t target = 0;
      std::string label;
    };

    // A composition triple g o f = h.
    struct Composite {
      std::size_t g, f, h;
    };

    FinCategory() = default;

    // Throws ValidationError (with the first failing law) unless the data
    // form a category. Every composable pair must be listed, except those
    // involving an identity, which are implied.
    FinCategory(std::vector<std::string>   objects,
                std::vector<Morphism>      morphisms,
                std::vector<std::size_t>   identities,
                std::vector<Composite> const& composites);

    // One-object category of a finite group.
    static FinCategory from_group(FiniteGroup const& g);
    // Rejects presentations that do not define a small finite group.
    static FinCategory from_presentation(GroupPresentation const& p, std::size_t max_cosets = 2000);
    // Poset on 0..n-1; leq[a][b] must be a partial order.
    static FinCategory from_poset(std::vector<std::vector<bool>> const& leq);
    static FinCategory trivial();

    std::size_t num_objects() const noexcept {
      return _objects.size();
    }
    std::size_t num_morphisms() const noexcept {
      return _morphisms.size();
    }
    std::string const& object_label(std::size_t c) const {
      return _objects.at(c);
    }
    std::vector<std::string> const& object_labels() const noexcept {
      return _objects;
    }
    Morphism const& morphism(std::size_t f) const {
      return _morphisms.at(f);
    }
    std::vector<Morphism> const& morphisms() const noexcept {
      return _morphisms;
    }
    std::size_t source(std::size_t f) const {
      return _morphisms[f].source;
    }
    std::size_t target(std::size_t f) const {
      return _morphisms[f].target;
    }
    std::size_t identity(std::size_t c) const {
      return _identities.at(c);
    }
    bool is_identity(std::size_t f) const {
      return _identities[source(f)] == f;
    }
    // g o f; throws ValidationError if not composable.
    std::size_t compose(std::size_t g, std::size_t f) const;

    std::vector<std::size_t> const& non_identity_morphisms() const noexcept {
      return _non_identities;
    }
    // Non-identity morphisms with the given source.
    std::vector<std::size_t> const& non_identities_from(std::size_t c) const {
      return _out.at(c);
    }

    // Unitality, associativity, closure and shape checks.
    std::optional<std::string> check_axioms() const;

   private:
    void index();

    std::vector<std::string>              _objects;
    std::vector<Morphism>                 _morphisms;
    std::vector<std::size_t>              _identities;
    std::vector<std::size_t>              _table;  // g * M + f
    std::vector<std::size_t>              _non_identities;
    std::vector<std::vector<std::size_t>> _out;
  };

  // A functor between finite categories, given on objects and morphisms.
  struct FinFunctor {
    std::vector<std::size_t> on_objects;
    std::vector<std::size_t> on_morphisms;

    static FinFunctor identity(FinCategory const& c);
    // The functor to the trivial category.
    static FinFunctor collapse(FinCategory const& c);
  };

  std::optional<std::string> check_functor(FinCategory const& source, FinCategory const& target,
                                           FinFunctor const& f);

  // g o f.
  FinFunctor compose_functors(FinFunctor const& g, FinFunctor const& f);

  // Full subcategory on the given objects, with its inclusion functor.
  struct Subcategory {
    FinCategory category;
    FinFunctor  inclusion;
  };
  Subcategory full_subcategory(FinCategory const& c, std::vector<std::size_t> const& objects);

}  // namespace repchar

#endif  // REPCHAR_FINCAT_CATEGORY_HPP_
