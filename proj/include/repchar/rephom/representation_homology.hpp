//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_REPHOM_REPRESENTATION_HOMOLOGY_HPP_
#define REPCHAR_REPHOM_REPRESENTATION_HOMOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "repchar/cychom/cyclic_homology.hpp"
#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/exactlin/integer_matrix.hpp"
#include "repchar/groupkit/finite_group.hpp"
#include "repchar/groupkit/simplicial_group.hpp"

namespace repchar {

  // One-dimensional representations (G = G_m). For a simplicial group
  // model, O(Rep(Gamma_q)) is the Laurent ring k[Z^{r_q}] and a face d_i
  // with abelianized matrix A (r_{q-1} x r_q) sends the monomial t^v to
  // t^{A v}.

  // Weight lattice element in the canonical coordinates of Cokernel::reduce.
  using Weight = std::vector<BigInt>;

  // HR_0(Gamma, G_m) = k[Gamma_ab].
  struct HrDegree0 {
    AbelianGroup group;
    std::string  description;  // e.g. "k[Z^2]: Laurent polynomials in 2 variables"
  };

  HrDegree0 hr_degree0(GroupPresentation const& p);

  struct HRAnswer {
    AbelianGroup             h1;              // pi_0 of the abelianized model: the weight lattice
    std::vector<std::size_t> homotopy_ranks;  // rank of pi_q (x) Q for q = 0..N; entry 0 is unused
    GradedDims               per_weight;      // dims in degrees 0..N of every weight summand
  };

  // Poincare series of the free graded-commutative algebra with ranks[q]
  // generators in degree q >= 1 (exterior in odd, polynomial in even
  // degrees), truncated at degree bound.
  GradedDims assemble_free_graded_commutative(std::vector<std::size_t> const& ranks, std::size_t bound);

  // Abelianize the model, take integer homology of its Moore complex and
  // assemble the rational homology of the product of Eilenberg-MacLane
  // spaces. Requires bound + 2 <= m.N.
  HRAnswer hr_derived_abelianization(SimplicialGroupModel const& m, std::size_t bound);

  // Normalized chains on the monomials of the abelianized model inside a
  // window. Level q keeps the exponent vectors v with |v|_inf <= window whose
  // faces all lie in the level q - 1 window, so the window is a simplicial
  // subset and d^2 = 0 holds exactly. The basis consists of its
  // nondegenerate vectors.
  struct MonomialComplex {
    std::size_t                                    window = 0;
    std::vector<std::vector<std::vector<std::int64_t>>> basis;    // per level
    std::vector<std::vector<std::size_t>>          weight_of;     // index into weights, per basis element
    std::vector<Weight>                            weights;       // sorted
    ChainComplex                                   complex;
  };

  MonomialComplex monomial_complex(SimplicialGroupModel const& m, std::size_t top, std::size_t window);

  struct WindowHomology {
    std::map<Weight, GradedDims> by_weight;
    GradedDims                   total;
  };

  WindowHomology window_homology(SimplicialGroupModel const& m, std::size_t bound, std::size_t window);

  // Brute-force HR over windows B and B + 1. An entry (weight, degree) is
  // trusted when the weight occurs in window B and its dimension agrees
  // across the two windows; a degree is trusted when all of its entries are.
  struct HrWindowResult {
    std::size_t                  window = 0;
    WindowHomology               at_window;
    WindowHomology               at_next_window;
    std::map<Weight, GradedDims> stable;  // weights of window B with their dims
    std::vector<std::pair<Weight, std::size_t>> unstable;  // flagged (weight, degree)
    std::vector<std::size_t>     trusted_degrees;

    bool report_empty() const {
      return unstable.empty();
    }
  };

  HrWindowResult hr_bruteforce_window(SimplicialGroupModel const& m, std::size_t bound, std::size_t window);

  // Agreement of both routes: every trusted (weight, degree) entry of the
  // window result equals the assembled per-weight dimension, and the weights
  // found are elements of h1.
  bool hr_routes_agree(HRAnswer const& derived, HrWindowResult const& window);

  std::string weight_to_string(Weight const& w);

}  // namespace repchar

#endif  // REPCHAR_REPHOM_REPRESENTATION_HOMOLOGY_HPP_
