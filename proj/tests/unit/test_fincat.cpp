#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "repchar/errors.hpp"
#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/fincat/category.hpp"
#include "repchar/fincat/functor.hpp"
#include "repchar/fincat/random.hpp"
#include "repchar/fincat/tor.hpp"

using namespace repchar;

namespace {

  std::vector<std::size_t> point_dims(std::size_t bound) {
    std::vector<std::size_t> v(bound + 1, 0);
    v[0] = 1;
    return v;
  }

  FinCategory arrow() {
    return FinCategory::from_poset({{true, true}, {false, true}});
  }

  // Two objects with exactly one morphism between any ordered pair.
  FinCategory codiscrete_pair() {
    return FinCategory({"0", "1"}, {{0, 0, "id0"}, {1, 1, "id1"}, {0, 1, "a"}, {1, 0, "b"}}, {0, 1},
                       {{3, 2, 0}, {2, 3, 1}});
  }

  // Order complex oracle: simplices are strictly increasing chains of
  // distinct poset elements, with the usual integer boundary.
  std::vector<std::size_t> order_complex_free_ranks(std::vector<std::vector<bool>> const& leq, std::size_t bound) {
    std::size_t const n = leq.size();
    std::vector<std::vector<std::vector<std::size_t>>> simplices(bound + 2);
    for (std::size_t a = 0; a < n; ++a) {
      simplices[0].push_back({a});
    }
    for (std::size_t q = 1; q < simplices.size(); ++q) {
      for (auto const& s : simplices[q - 1]) {
        for (std::size_t b = 0; b < n; ++b) {
          if (b != s.back() && leq[s.back()][b]) {
            auto t = s;
            t.push_back(b);
            simplices[q].push_back(t);
          }
        }
      }
    }
    IntegerChainComplex cx;
    for (auto const& level : simplices) {
      cx.ranks.push_back(level.size());
    }
    cx.differentials.emplace_back(0, 0);
    for (std::size_t q = 1; q < simplices.size(); ++q) {
      std::map<std::vector<std::size_t>, std::size_t> index;
      for (std::size_t i = 0; i < simplices[q - 1].size(); ++i) {
        index[simplices[q - 1][i]] = i;
      }
      IntegerMatrix d(simplices[q - 1].size(), simplices[q].size());
      for (std::size_t j = 0; j < simplices[q].size(); ++j) {
        for (std::size_t i = 0; i <= q; ++i) {
          auto face = simplices[q][j];
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          d(index.at(face), j) += (i % 2 == 0 ? 1 : -1);
        }
      }
      cx.differentials.push_back(d);
    }
    std::vector<std::size_t> out;
    auto groups = homology_of_integer_complex(cx);
    for (std::size_t q = 0; q <= bound; ++q) {
      out.push_back(groups[q].free_rank);
    }
    return out;
  }

  std::vector<std::vector<bool>> order_of(FinCategory const& poset) {
    std::vector<std::vector<bool>> leq(poset.num_objects(), std::vector<bool>(poset.num_objects(), false));
    for (auto const& m : poset.morphisms()) {
      leq[m.source][m.target] = true;
    }
    return leq;
  }

  // Number of orbits of a group acting on a finite set.
  std::size_t orbit_count(SetFunctor const& f) {
    std::vector<bool> seen(f.sizes[0], false);
    std::size_t       orbits = 0;
    for (std::size_t x = 0; x < f.sizes[0]; ++x) {
      if (seen[x]) {
        continue;
      }
      ++orbits;
      for (auto const& map : f.maps) {
        seen[map[x]] = true;
      }
    }
    return orbits;
  }

  // A random G-set: a disjoint union of coset spaces G/<g>.
  SetFunctor random_group_set(std::mt19937_64& rng, FiniteGroup const& g) {
    SetFunctor f;
    std::size_t orbits = 1 + rng() % 2;
    std::vector<std::vector<std::size_t>> cosets;  // element -> coset id, per orbit
    std::size_t total = 0;
    for (std::size_t o = 0; o < orbits; ++o) {
      std::size_t h = rng() % g.order();
      std::set<std::size_t> sub{g.identity()};
      for (std::size_t p = h; p != g.identity(); p = g.mul(p, h)) {
        sub.insert(p);
      }
      std::vector<std::size_t> coset(g.order(), FinCategory::none);
      std::size_t count = 0;
      for (std::size_t a = 0; a < g.order(); ++a) {
        if (coset[a] != FinCategory::none) {
          continue;
        }
        for (auto s : sub) {
          coset[g.mul(a, s)] = total + count;
        }
        ++count;
      }
      total += count;
      cosets.push_back(coset);
    }
    f.sizes = {total};
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::vector<std::size_t> map(total);
      for (auto const& coset : cosets) {
        for (std::size_t b = 0; b < g.order(); ++b) {
          map[coset[b]] = coset[g.mul(a, b)];
        }
      }
      f.maps.push_back(map);
    }
    return f;
  }

}  // namespace

TEST_CASE("category of elements of the regular Z/2-set") {
  auto const z2 = FiniteGroup::cyclic(2);
  auto const c  = FinCategory::from_group(z2);
  auto const f  = SetFunctor::regular(z2);
  auto const el = category_of_elements(c, f);
  CHECK(el.category.num_objects() == 2);
  CHECK(el.category.num_morphisms() == 4);
  // Every hom-set has exactly one element: a contractible groupoid.
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      std::size_t count = 0;
      for (auto const& m : el.category.morphisms()) {
        count += m.source == x && m.target == y;
      }
      CHECK(count == 1);
    }
  }
  CHECK(nerve_homology_dims(el.category, 4) == point_dims(4));
}

TEST_CASE("category of elements: constant and empty functors") {
  std::mt19937_64 rng(11);
  auto const c = random_poset(rng, 5);
  auto const one = category_of_elements(c, SetFunctor::constant(c, 1));
  CHECK(one.category.num_objects() == c.num_objects());
  CHECK(one.category.num_morphisms() == c.num_morphisms());
  auto const empty = category_of_elements(c, SetFunctor::constant(c, 0));
  CHECK(empty.category.num_objects() == 0);
  CHECK(empty.category.num_morphisms() == 0);
}

TEST_CASE("category of elements hom-sets match direct enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto const c  = random_poset(rng, 1 + rng() % 6);
    auto const f  = random_poset_set_functor(rng, c, 5);
    auto const el = category_of_elements(c, f);
    auto const& e = el.category;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> homs;
    for (auto const& m : e.morphisms()) {
      ++homs[{m.source, m.target}];
    }
    for (std::size_t a = 0; a < e.num_objects(); ++a) {
      for (std::size_t b = 0; b < e.num_objects(); ++b) {
        std::size_t ca = el.projection.on_objects[a], cb = el.projection.on_objects[b];
        std::size_t expected = 0;
        for (std::size_t phi = 0; phi < c.num_morphisms(); ++phi) {
          if (c.source(phi) == ca && c.target(phi) == cb
              && f.maps[phi][el.object_fibre[a]] == el.object_fibre[b]) {
            ++expected;
          }
        }
        CHECK(homs[{a, b}] == expected);
      }
    }
  }
}

TEST_CASE("Grothendieck composition law on all composable pairs") {
  // B(Z/2) acting on the codiscrete pair by swapping, and B(S3) acting
  // through its sign on the same groupoid.
  auto const pair = codiscrete_pair();
  FinFunctor swap{{1, 0}, {1, 0, 3, 2}};
  for (auto const& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    auto const c  = FinCategory::from_group(g);
    auto const ab = abelianization(g);
    CatDiagram d;
    d.values = {pair};
    for (std::size_t a = 0; a < g.order(); ++a) {
      // Sign of a permutation: parity of its image in the abelianization.
      bool odd = g.order() == 2 ? a != g.identity() : ab.class_of[a] != ab.class_of[g.identity()];
      d.maps.push_back(odd ? swap : FinFunctor::identity(pair));
    }
    auto const gr = grothendieck(c, d);
    auto const& e = gr.category;
    CHECK(e.num_objects() == 2);
    CHECK(e.num_morphisms() == 4 * g.order());
    std::size_t checked = 0;
    for (std::size_t x = 0; x < e.num_morphisms(); ++x) {
      for (std::size_t y = 0; y < e.num_morphisms(); ++y) {
        if (e.target(y) != e.source(x)) {
          continue;
        }
        auto const xy  = e.compose(x, y);
        auto const psi = gr.projection.on_morphisms[x];
        auto const phi = gr.projection.on_morphisms[y];
        CHECK(gr.projection.on_morphisms[xy] == c.compose(psi, phi));
        auto moved = d.maps[psi].on_morphisms[gr.morphism_fibre[y]];
        CHECK(gr.morphism_fibre[xy] == pair.compose(gr.morphism_fibre[x], moved));
        ++checked;
      }
    }
    CHECK(checked == 2 * 4 * g.order() * g.order());
  }
}

TEST_CASE("non-functorial data are rejected") {
  auto const c = arrow();
  SetFunctor bad;
  bad.sizes = {2, 2};
  bad.maps  = {{1, 0}, {0, 1}, {0, 1}};  // identity of object 0 swaps
  CHECK(check_set_functor(c, bad).has_value());
  CHECK_THROWS_AS(category_of_elements(c, bad), ValidationError);

  auto const g = FiniteGroup::cyclic(2);
  auto const bg = FinCategory::from_group(g);
  auto n = ModuleFunctor::constant(bg, Variance::contravariant, 1);
  auto m = ModuleFunctor::constant(bg, Variance::covariant, 1);
  m.maps[1 - g.identity()] = SparseMatrix::from_triplets(1, 1, {{0, 0, Rational(2)}});
  CHECK_THROWS_AS(tor_dims(bg, n, m, 2), ValidationError);
  CHECK_THROWS_AS(tor_dims(bg, m, n, 2), ValidationError);
}

TEST_CASE("infinite groups are rejected") {
  GroupPresentation z{1, {}};
  CHECK_THROWS_AS(FinCategory::from_presentation(z), ValidationError);
  GroupPresentation z2{2, {FreeWord::parse("x0 x1 x0^-1 x1^-1")}};
  CHECK_THROWS_AS(FinCategory::from_presentation(z2), ValidationError);
}

TEST_CASE("nerve examples") {
  CHECK(nerve_homology_dims(FinCategory::trivial(), 4) == point_dims(4));
  CHECK(nerve_homology_dims(arrow(), 1) == point_dims(1));
  // The nerve of a group has the rational homology of a point.
  CHECK(nerve_homology_dims(FinCategory::from_group(FiniteGroup::cyclic(3)), 4) == point_dims(4));
  // Discrete category on three objects.
  auto const disc = FinCategory::from_poset({{true, false, false}, {false, true, false}, {false, false, true}});
  CHECK(nerve_homology_dims(disc, 2) == std::vector<std::size_t>{3, 0, 0});
  // A circle: two minima below two maxima.
  std::vector<std::vector<bool>> circle = {
      {true, false, true, true}, {false, true, true, true}, {false, false, true, false}, {false, false, false, true}};
  CHECK(nerve_homology_dims(FinCategory::from_poset(circle), 2) == std::vector<std::size_t>{1, 1, 0});
  CHECK(nerve(FinCategory::from_poset(circle), 3).first_d_squared_failure() == std::nullopt);
}

TEST_CASE("nerve of a poset matches the order complex") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto const c = random_poset(rng, 1 + rng() % 6);
    CHECK(nerve_homology_dims(c, 3) == order_complex_free_ranks(order_of(c), 3));
  }
}

TEST_CASE("categories with an initial or terminal object are contractible") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto const base = random_poset(rng, 1 + rng() % 5);
    auto leq = order_of(base);
    std::size_t const n = leq.size();
    bool const bottom = trial % 2 == 0;
    for (auto& row : leq) {
      row.push_back(!bottom);
    }
    leq.push_back(std::vector<bool>(n + 1, bottom));
    leq[n][n] = true;
    CHECK(nerve_homology_dims(FinCategory::from_poset(leq), 3) == point_dims(3));
  }
  // The category of elements of a transitive G-set has a terminal-like
  // contractible structure: it is a connected groupoid with trivial groups.
  auto const s3 = FiniteGroup::symmetric(3);
  auto const el = category_of_elements(FinCategory::from_group(s3), SetFunctor::regular(s3));
  CHECK(nerve_homology_dims(el.category, 3) == point_dims(3));
}

TEST_CASE("functor tensor product examples") {
  auto const triv = FinCategory::trivial();
  CHECK(functor_tensor_product(triv, ModuleFunctor::constant(triv, Variance::contravariant),
                               ModuleFunctor::constant(triv, Variance::covariant))
            .dimension == 1);
  auto const z2 = FiniteGroup::cyclic(2);
  auto const bg = FinCategory::from_group(z2);
  auto const reg = linearize(bg, SetFunctor::regular(z2));
  auto const k   = ModuleFunctor::constant(bg, Variance::contravariant);
  auto const t   = functor_tensor_product(bg, k, reg);
  CHECK(t.dimension == 1);
  REQUIRE(t.basis.size() == 1);
  CHECK(t.basis[0].object == 0);
  CHECK(functor_tensor_product(bg, k, ModuleFunctor::zero(bg, Variance::covariant)).dimension == 0);
}

TEST_CASE("group Tor with rational coefficients") {
  for (auto const& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    auto const bg = FinCategory::from_group(g);
    auto const k  = ModuleFunctor::constant(bg, Variance::contravariant);
    CHECK(tor_dims(bg, k, ModuleFunctor::constant(bg, Variance::covariant), 4) == point_dims(4));
    CHECK(tor_dims(bg, k, linearize(bg, SetFunctor::regular(g)), 3) == point_dims(3));
  }
  // Permutation modules: H_0 counts orbits and higher groups vanish.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto const g  = trial % 2 == 0 ? FiniteGroup::cyclic(4) : FiniteGroup::symmetric(3);
    auto const bg = FinCategory::from_group(g);
    auto const f  = random_group_set(rng, g);
    REQUIRE_FALSE(check_set_functor(bg, f).has_value());
    auto dims = tor_dims(bg, ModuleFunctor::constant(bg, Variance::contravariant), linearize(bg, f), 2);
    CHECK(dims == std::vector<std::size_t>{orbit_count(f), 0, 0});
  }
}

TEST_CASE("Tor_0 equals the functor tensor product") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    auto const c = random_poset(rng, 1 + rng() % 6);
    auto const x = random_poset_module(rng, c, 4);
    auto const m = linearize(c, random_poset_set_functor(rng, c, 4));
    REQUIRE_FALSE(check_module_functor(c, x).has_value());
    CHECK(tor_dims(c, x, m, 0)[0] == functor_tensor_product(c, x, m).dimension);
  }
}

TEST_CASE("Shapiro: worked and trivial instances") {
  auto const z2 = FiniteGroup::cyclic(2);
  auto const bg = FinCategory::from_group(z2);
  auto const k  = ModuleFunctor::constant(bg, Variance::contravariant);
  auto const r  = shapiro_check(bg, SetFunctor::regular(z2), k, 3);
  CHECK(r.agree);
  CHECK(r.over_elements == point_dims(3));
  CHECK(r.over_base == point_dims(3));

  std::mt19937_64 rng(31);
  auto const c  = random_poset(rng, 5);
  auto const x  = random_poset_module(rng, c, 3);
  auto const pt = shapiro_check(c, SetFunctor::constant(c, 1), x, 3);
  CHECK(pt.agree);
  CHECK(pt.over_base == tor_dims(c, x, ModuleFunctor::constant(c, Variance::covariant), 3));
}

TEST_CASE("Shapiro: seeded random posets") {
  std::mt19937_64 rng(2024);
  std::size_t nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto const c = random_poset(rng, 1 + rng() % 6);
    auto const f = random_poset_set_functor(rng, c, 5);
    auto const x = random_poset_module(rng, c, 3);
    auto const r = shapiro_check(c, f, x, 3);
    CHECK_MESSAGE(r.agree, "trial " << trial);
    bool positive = false;
    for (std::size_t q = 1; q < r.over_base.size(); ++q) {
      positive |= r.over_base[q] != 0;
    }
    nontrivial += positive;
  }
  // The generator must reach instances with higher Tor.
  CHECK(nontrivial > 0);
}

TEST_CASE("Shapiro: random G-sets") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    auto const g  = trial % 2 == 0 ? FiniteGroup::cyclic(3) : FiniteGroup::symmetric(3);
    auto const bg = FinCategory::from_group(g);
    auto const r  = shapiro_check(bg, random_group_set(rng, g), ModuleFunctor::constant(bg, Variance::contravariant), 2);
    CHECK(r.agree);
  }
}

TEST_CASE("restrict_tor: identity functor") {
  std::mt19937_64 rng(41);
  auto const c = random_poset(rng, 5);
  auto const x = random_poset_module(rng, c, 3);
  auto const m = linearize(c, random_poset_set_functor(rng, c, 3));
  auto const r = restrict_tor(c, c, FinFunctor::identity(c), x, m, 2);
  CHECK(r.source_dims == r.target_dims);
  REQUIRE(r.induced.size() == 3);
  for (std::size_t q = 0; q <= 2; ++q) {
    CHECK(r.induced[q] == RationalMatrix::identity(r.source_dims[q]));
  }
}

TEST_CASE("restrict_tor: full subcategory with an initial object") {
  // 0 is initial in the poset 0 < 1, 0 < 2, 1 < 3, 2 < 3.
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}};
  auto const c   = FinCategory::from_poset(leq);
  auto const sub = full_subcategory(c, {0, 1, 2});
  auto const k   = ModuleFunctor::constant(c, Variance::contravariant);
  auto const one = ModuleFunctor::constant(c, Variance::covariant);
  auto const r   = restrict_tor(sub.category, c, sub.inclusion, k, one, 1);
  CHECK(r.source_dims[0] == 1);
  CHECK(r.target_dims[0] == 1);
  CHECK(r.induced[0].rank() == 1);
}

TEST_CASE("restrict_tor: collapse to the trivial category") {
  auto const triv = FinCategory::trivial();
  auto const k    = ModuleFunctor::constant(triv, Variance::contravariant);
  auto const one  = ModuleFunctor::constant(triv, Variance::covariant);
  // Two components: Tor_0 = Q^2 maps onto Q.
  auto const disc = FinCategory::from_poset({{true, false, false}, {false, true, true}, {false, false, true}});
  auto const r    = restrict_tor(disc, triv, FinFunctor::collapse(disc), k, one, 1);
  CHECK(r.source_dims[0] == 2);
  CHECK(r.target_dims[0] == 1);
  CHECK(r.induced[0].rank() == 1);
  // A group category: every chain collapses onto degenerate ones.
  auto const bg = FinCategory::from_group(FiniteGroup::symmetric(3));
  auto const g  = restrict_tor(bg, triv, FinFunctor::collapse(bg), k, one, 2);
  CHECK(g.induced[0].rank() == 1);
  CHECK_THROWS_AS(restrict_tor(bg, triv, FinFunctor{{0}, {0}}, k, one, 1), ValidationError);
}

TEST_CASE("Thomason: worked examples") {
  // Trivial base: both sides are the homology of the fibre.
  std::vector<std::vector<bool>> circle = {
      {true, false, true, true}, {false, true, true, true}, {false, false, true, false}, {false, false, false, true}};
  auto const fibre = FinCategory::from_poset(circle);
  CatDiagram over_point{{fibre}, {FinFunctor::identity(fibre)}};
  auto const t1 = thomason_check(FinCategory::trivial(), over_point, 3);
  CHECK(t1.agree);
  CHECK(t1.nerve_side == std::vector<std::size_t>{1, 1, 0, 0});

  // Arrow with contractible fibres.
  auto const a    = arrow();
  auto const pair = codiscrete_pair();
  auto const tri  = FinCategory::from_poset({{true, true, true}, {false, true, false}, {false, false, true}});
  // Both objects of the pair go to the bottom element of the V-shaped poset.
  FinFunctor push{{0, 0}, {0, 0, 0, 0}};
  CatDiagram arrow_diag{{pair, tri}, {FinFunctor::identity(pair), push, FinFunctor::identity(tri)}};
  REQUIRE_FALSE(check_cat_diagram(a, arrow_diag).has_value());
  auto const t2 = thomason_check(a, arrow_diag, 3);
  CHECK(t2.agree);
  CHECK(t2.bicomplex_side == point_dims(3));

  // Z/2 swapping the codiscrete pair.
  auto const z2 = FiniteGroup::cyclic(2);
  CatDiagram swap_diag;
  swap_diag.values = {pair};
  for (std::size_t g = 0; g < 2; ++g) {
    swap_diag.maps.push_back(g == z2.identity() ? FinFunctor::identity(pair) : FinFunctor{{1, 0}, {1, 0, 3, 2}});
  }
  auto const t3 = thomason_check(FinCategory::from_group(z2), swap_diag, 3);
  CHECK(t3.agree);
  CHECK(t3.nerve_side == point_dims(3));
}

TEST_CASE("Thomason: random discrete diagrams over posets") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto const c = random_poset(rng, 1 + rng() % 5);
    auto const f = random_poset_set_functor(rng, c, 4);
    auto const r = thomason_check(c, CatDiagram::discrete(c, f), 2);
    CHECK_MESSAGE(r.agree, "trial " << trial);
  }
}
