//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_FINCAT_FUNCTOR_HPP_
#define REPCHAR_FINCAT_FUNCTOR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repchar/exactlin/sparse_matrix.hpp"
#include "repchar/fincat/category.hpp"

namespace repchar {

  // Covariant functor to finite sets: F(c) = {0, ..., sizes[c] - 1} and
  // maps[f][x] = F(f)(x).
  struct SetFunctor {
    std::vector<std::size_t>              sizes;
    std::vector<std::vector<std::size_t>> maps;

    static SetFunctor constant(FinCategory const& c, std::size_t size = 1);
    // One-object group category acting on itself by left multiplication.
    static SetFunctor regular(FiniteGroup const& g);
  };

  std::optional<std::string> check_set_functor(FinCategory const& c, SetFunctor const& f);

  enum class Variance { covariant, contravariant };

  // Functor to finite-dimensional Q-vector spaces. For a morphism f: c -> d
  // the matrix maps[f] is dims[d] x dims[c] when covariant and dims[c] x
  // dims[d] when contravariant.
  struct ModuleFunctor {
    Variance                  variance = Variance::covariant;
    std::vector<std::size_t>  dims;
    std::vector<SparseMatrix> maps;

    static ModuleFunctor constant(FinCategory const& c, Variance v, std::size_t dim = 1);
    static ModuleFunctor zero(FinCategory const& c, Variance v);
  };

  std::optional<std::string> check_module_functor(FinCategory const& c, ModuleFunctor const& m);

  // k[F], covariant.
  ModuleFunctor linearize(FinCategory const& c, SetFunctor const& f);

  // Precomposition with a functor p: D -> C.
  ModuleFunctor pullback(ModuleFunctor const& m, FinFunctor const& p);

  // A strict diagram of finite categories: values[c] for each object and a
  // functor maps[f]: values[source f] -> values[target f] for each morphism.
  struct CatDiagram {
    std::vector<FinCategory> values;
    std::vector<FinFunctor>  maps;

    static CatDiagram discrete(FinCategory const& c, SetFunctor const& f);
  };

  std::optional<std::string> check_cat_diagram(FinCategory const& c, CatDiagram const& d);

  // The Grothendieck construction C∫F. Objects are pairs (c, x) with x an
  // object of F(c); a morphism (c, x) -> (d, y) is a pair (phi, f) with
  // phi: c -> d and f: F(phi)(x) -> y, and
  //   (psi, g) o (phi, f) = (psi phi, g o F(psi)(f)).
  struct Grothendieck {
    FinCategory              category;
    FinFunctor               projection;      // to C
    std::vector<std::size_t> object_fibre;    // x for each object (c, x)
    std::vector<std::size_t> morphism_fibre;  // f for each morphism (phi, f)
  };

  Grothendieck grothendieck(FinCategory const& c, CatDiagram const& d);

  // Category of elements of a set-valued functor: the Grothendieck
  // construction of F viewed as a diagram of discrete categories.
  Grothendieck category_of_elements(FinCategory const& c, SetFunctor const& f);

}  // namespace repchar

#endif  // REPCHAR_FINCAT_FUNCTOR_HPP_
