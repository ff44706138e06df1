//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_CHARMAP_CHARACTER_HPP_
#define REPCHAR_CHARMAP_CHARACTER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "repchar/cychom/cyclic_homology.hpp"
#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/groupkit/cyclic_bar.hpp"
#include "repchar/groupkit/finite_group.hpp"
#include "repchar/rephom/polynomial.hpp"
#include "repchar/rephom/representation_homology.hpp"

namespace repchar {

  // Exponent vector of a Laurent monomial t_0^{e_0} ... t_m^{e_m} in the
  // coordinate ring of G_m^{m+1}.
  using LaurentMonomial = std::vector<std::int64_t>;

  std::string laurent_to_string(LaurentMonomial const& e);

  // The level-m trace element for the multiplicative group and P = t:
  // t_0 t_1 ... t_m.
  LaurentMonomial delta_trace(std::size_t m);

  // The cocyclic structure map of O(G_m)^{(x)(*+1)} attached to a cyclic
  // generator [a] -> [b]: a monomial at level a goes to level b by the
  // abelianized matrix of psi_cyc(gen).
  LaurentMonomial apply_cocyclic(CyclicGenerator const& gen, LaurentMonomial const& e);

  // First generator with source and target <= max_m under which the family
  // element(m) is not natural, if any.
  std::optional<CyclicGenerator> first_naturality_failure(std::function<LaurentMonomial(std::size_t)> const& element,
                                                          std::size_t max_m);

  // Naturality of delta_trace for every generator up to level max_m >= 1.
  bool check_cocyclic_naturality(std::size_t max_m);

  // Degree-0 character for G_m: the class of g in the abelianization, in
  // the canonical coordinates of Cokernel (torsion first, then free).
  // Throws ValidationError if g uses a generator beyond the rank.
  Weight char0_gm(GroupPresentation const& p, FreeWord const& g);

  // Degree-0 character for G_m of a finite group: the index of [g] in the
  // element list of abelianization(g).
  std::size_t char0_gm(FiniteGroup const& group, FiniteGroup::element g);

  // Tr(w(X)) over the ring of rep_ring_gln_degree0(p, n).
  struct GlnCharacter {
    std::vector<std::string> variables;
    Polynomial               trace;

    std::string to_string() const {
      return trace.to_string(variables);
    }
  };

  GlnCharacter char0_gln(GroupPresentation const& p, FreeWord const& g, std::size_t n);

  // The character as a chain map. The source is the total complex of the
  // cyclic bicomplex of Q[G]; the target is the same construction on the
  // constant cyclic module Q[G_ab], and the tuple (g_0, ..., g_q) goes to
  // t^{[g_0 ... g_q]} in every column. Only H_0 of the target is the
  // representation homology; higher degrees are not reported as character
  // values.
  struct CharacterChainMap {
    ChainComplex   source;
    ChainComplex   target;
    ChainMap       map;
    bool           commutes = false;
    Hc0Basis       classes;
    Abelianization abelian;
    // H_0 map in the conjugacy-class basis against the group elements of
    // G_ab, read off through homology_basis / induced_map_on_homology.
    RationalMatrix h0;
    // The same matrix from char0_gm applied to class representatives.
    RationalMatrix h0_direct;
  };

  // Degrees 0..top with top >= 1.
  CharacterChainMap char_chain_map_gm(FiniteGroup const& g, std::size_t top);

  // HS_0(Q[G]) as the colimit over Delta S of the tuples G^{n+1} for
  // n <= max_level; it is the span of the components of that category of
  // elements. max_level = 1 only identifies gh with hg (conjugacy classes);
  // max_level = 2 reaches G_ab.
  struct Hs0 {
    std::size_t                       dimension = 0;
    std::vector<FiniteGroup::element> representatives;  // one level-0 tuple per component
    std::vector<std::size_t>          class_of;         // group element -> component
  };

  Hs0 hs0(FiniteGroup const& g, std::size_t max_level = 2);

  // HC_0 -> HS_0 -> HR_0 against the character on H_0.
  struct TriangleResult {
    bool           holds = false;
    std::string    reason;      // empty when holds
    RationalMatrix iota_star;   // dim HS_0 x #classes
    RationalMatrix psi_star;    // |G_ab| x dim HS_0
    RationalMatrix character;   // |G_ab| x #classes
    std::size_t    character_rank = 0;
  };

  TriangleResult check_triangle_degree0(FiniteGroup const& g);

}  // namespace repchar

#endif  // REPCHAR_CHARMAP_CHARACTER_HPP_
