//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/fincat/random.hpp"

#include <numeric>
#include <vector>

#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    // leq[a][b] recovered from the morphisms of a poset category.
    std::vector<std::vector<bool>> order_of(FinCategory const& poset) {
      std::size_t const n = poset.num_objects();
      std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
      for (auto const& m : poset.morphisms()) {
        if (leq[m.source][m.target]) {
          throw ValidationError("category is not a poset");
        }
        leq[m.source][m.target] = true;
      }
      return leq;
    }

    // Set functor along leq (covariant when up is true, along the reversed
    // order otherwise), as sizes plus a class map per object.
    SetFunctor quotient_functor(std::mt19937_64& rng, FinCategory const& poset, std::size_t universe,
                                bool up) {
      std::size_t const n   = poset.num_objects();
      auto const        leq = order_of(poset);
      std::vector<std::vector<bool>>        subset(n, std::vector<bool>(universe));
      std::vector<std::vector<std::size_t>> partition(n, std::vector<std::size_t>(universe));
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t s = 0; s < universe; ++s) {
          subset[c][s]    = rng() % 3 == 0;
          partition[c][s] = rng() % universe;
        }
      }
      // below(a, c): a contributes to c.
      auto below = [&](std::size_t a, std::size_t c) { return up ? leq[a][c] : leq[c][a]; };
      std::vector<std::vector<bool>>        member(n, std::vector<bool>(universe, false));
      std::vector<std::vector<std::size_t>> cls(n, std::vector<std::size_t>(universe, 0));
      SetFunctor                            f;
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> parent(universe);
        std::iota(parent.begin(), parent.end(), 0);
        for (std::size_t a = 0; a < n; ++a) {
          if (!below(a, c)) {
            continue;
          }
          for (std::size_t s = 0; s < universe; ++s) {
            member[c][s] = member[c][s] || subset[a][s];
            for (std::size_t t = s + 1; t < universe; ++t) {
              if (partition[a][s] == partition[a][t]) {
                parent[find_root(parent, s)] = find_root(parent, t);
              }
            }
          }
        }
        std::vector<std::size_t> label(universe, FinCategory::none);
        std::size_t              count = 0;
        for (std::size_t s = 0; s < universe; ++s) {
          if (!member[c][s]) {
            continue;
          }
          auto& l = label[find_root(parent, s)];
          if (l == FinCategory::none) {
            l = count++;
          }
          cls[c][s] = l;
        }
        f.sizes.push_back(count);
      }
      for (std::size_t m = 0; m < poset.num_morphisms(); ++m) {
        std::size_t from = up ? poset.source(m) : poset.target(m);
        std::size_t to   = up ? poset.target(m) : poset.source(m);
        std::vector<std::size_t> map(f.sizes[from]);
        for (std::size_t s = 0; s < universe; ++s) {
          if (member[from][s]) {
            map[cls[from][s]] = cls[to][s];
          }
        }
        f.maps.push_back(std::move(map));
      }
      return f;
    }

  }  // namespace

  FinCategory random_poset(std::mt19937_64& rng, std::size_t objects) {
    std::vector<std::vector<bool>> leq(objects, std::vector<bool>(objects, false));
    for (std::size_t a = 0; a < objects; ++a) {
      leq[a][a] = true;
      for (std::size_t b = a + 1; b < objects; ++b) {
        leq[a][b] = rng() % 3 == 0;
      }
    }
    for (std::size_t k = 0; k < objects; ++k) {
      for (std::size_t a = 0; a < objects; ++a) {
        for (std::size_t b = 0; b < objects; ++b) {
          leq[a][b] = leq[a][b] || (leq[a][k] && leq[k][b]);
        }
      }
    }
    return FinCategory::from_poset(leq);
  }

  SetFunctor random_poset_set_functor(std::mt19937_64& rng, FinCategory const& poset, std::size_t max_size) {
    if (max_size == 0) {
      return SetFunctor::constant(poset, 0);
    }
    return quotient_functor(rng, poset, 1 + rng() % max_size, true);
  }

  ModuleFunctor random_poset_module(std::mt19937_64& rng, FinCategory const& poset, std::size_t max_dim) {
    if (max_dim == 0) {
      return ModuleFunctor::zero(poset, Variance::contravariant);
    }
    auto const f = quotient_functor(rng, poset, 1 + rng() % max_dim, false);
    std::vector<std::vector<Rational>> scale(poset.num_objects());
    for (std::size_t c = 0; c < poset.num_objects(); ++c) {
      for (std::size_t x = 0; x < f.sizes[c]; ++x) {
        std::int64_t num = static_cast<std::int64_t>(rng() % 7) - 3;
        scale[c].push_back(Rational(num == 0 ? 1 : num) / Rational(static_cast<std::int64_t>(1 + rng() % 4)));
      }
    }
    ModuleFunctor m;
    m.variance = Variance::contravariant;
    m.dims     = f.sizes;
    // For a <= b the matrix is X(b) -> X(a): D_a P D_b^{-1}.
    for (std::size_t g = 0; g < poset.num_morphisms(); ++g) {
      std::size_t const     a = poset.source(g);
      std::size_t const     b = poset.target(g);
      SparseMatrix::Builder builder(f.sizes[a], f.sizes[b]);
      for (std::size_t x = 0; x < f.sizes[b]; ++x) {
        std::size_t y = f.maps[g][x];
        builder.add(y, x, scale[a][y] / scale[b][x]);
      }
      m.maps.push_back(std::move(builder).build());
    }
    return m;
  }

}  // namespace repchar
