//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_GROUPKIT_CYCLIC_BAR_HPP_
#define REPCHAR_GROUPKIT_CYCLIC_BAR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "repchar/groupkit/finite_group.hpp"

namespace repchar {

  // Generators of the cyclic category, as morphisms of Delta C:
  //   face       d^i_n : [n-1] -> [n], 0 <= i <= n, n >= 1
  //   degeneracy s^j_n : [n+1] -> [n], 0 <= j <= n
  //   cyclic     tau_n : [n]   -> [n]
  struct CyclicGenerator {
    enum class Kind { face, degeneracy, cyclic };

    Kind        kind;
    std::size_t n;
    std::size_t i = 0;

    static CyclicGenerator face(std::size_t n, std::size_t i) {
      return {Kind::face, n, i};
    }
    static CyclicGenerator degeneracy(std::size_t n, std::size_t j) {
      return {Kind::degeneracy, n, j};
    }
    static CyclicGenerator cyclic(std::size_t n) {
      return {Kind::cyclic, n, 0};
    }

    std::size_t source() const noexcept {
      return kind == Kind::face ? n - 1 : (kind == Kind::degeneracy ? n + 1 : n);
    }
    std::size_t target() const noexcept {
      return n;
    }
    // Throws ValidationError on an out-of-range index.
    void check() const;

    std::string to_string() const;

    friend bool operator==(CyclicGenerator const&, CyclicGenerator const&) = default;
  };

  // A composite w[0] o w[1] o ... o w[k-1] in Delta C (w[k-1] applied first).
  // The empty word is not allowed; use identity_level for identities.
  using CyclicWord = std::vector<CyclicGenerator>;

  // Source and target of a composable word; throws ValidationError otherwise.
  std::size_t word_source(CyclicWord const& w);
  std::size_t word_target(CyclicWord const& w);

  // Level q of the cyclic bar construction: tuples (g_0, ..., g_q) in
  // Gamma^{q+1}, encoded as integers with g_0 the most significant digit.
  class CyclicBar {
   public:
    using Tuple = std::vector<FiniteGroup::element>;

    explicit CyclicBar(FiniteGroup const& g) : _group(&g) {}

    FiniteGroup const& group() const noexcept {
      return *_group;
    }
    std::size_t level_size(std::size_t q) const;

    std::size_t encode(Tuple const& t) const;
    Tuple       decode(std::size_t index, std::size_t q) const;

    // d_i merges positions i and i + 1 for i < q; d_q gives (g_q g_0, g_1, ...).
    Tuple face(Tuple const& t, std::size_t i) const;
    // s_j inserts the identity after position j.
    Tuple degeneracy(Tuple const& t, std::size_t j) const;
    // t_q (g_0, ..., g_q) = (g_q, g_0, ..., g_{q-1}).
    Tuple cyclic(Tuple const& t) const;

    // Action of a Delta C generator (contravariant: level target -> source).
    Tuple act(CyclicGenerator const& gen, Tuple const& t) const;
    Tuple act(CyclicWord const& w, Tuple const& t) const;

    // Product g_0 g_1 ... g_q.
    FiniteGroup::element product(Tuple const& t) const;

   private:
    FiniteGroup const* _group;
  };

  // Pulls a tuple of Gamma^m = Hom(F_m, Gamma) back along f: F_n -> F_m.
  CyclicBar::Tuple pullback_hom(FiniteGroup const& g, GroupHom const& f, CyclicBar::Tuple const& t);

  // The action of a Delta C word on the cyclic bar construction computed as
  // the pullback of the Yoneda functor along psi_cyc(w).
  CyclicBar::Tuple pullback_via_psi_cyc(FiniteGroup const& g, CyclicWord const& w, CyclicBar::Tuple const& t);

}  // namespace repchar

#endif  // REPCHAR_GROUPKIT_CYCLIC_BAR_HPP_
