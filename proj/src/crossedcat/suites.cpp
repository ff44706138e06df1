//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/crossedcat/suites.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "repchar/crossedcat/cyclic.hpp"
#include "repchar/crossedcat/delta_s.hpp"
#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    using Rng = std::mt19937_64;

    std::size_t uniform(Rng& rng, std::size_t k) {
      return static_cast<std::size_t>(rng() % k);
    }

    DeltaSMorphism random_morphism(Rng& rng, std::size_t n, std::size_t m) {
      std::vector<std::uint32_t> perm(n + 1);
      std::iota(perm.begin(), perm.end(), 0);
      for (std::size_t i = n; i > 0; --i) {
        std::swap(perm[i], perm[uniform(rng, i + 1)]);
      }
      // m cut points in 0..n+1; a cut at p starts a new monomial before x_perm[p]
      std::vector<std::size_t> cuts(m);
      for (auto& c : cuts) {
        c = uniform(rng, n + 2);
      }
      std::sort(cuts.begin(), cuts.end());
      std::vector<DeltaSMorphism::Monomial> monos(m + 1);
      std::size_t                           block = 0;
      for (std::size_t p = 0; p <= n; ++p) {
        while (block < m && cuts[block] <= p) {
          ++block;
        }
        monos[block].push_back(perm[p]);
      }
      return DeltaSMorphism(n, std::move(monos));
    }

    std::vector<std::vector<std::size_t>> monotone_maps(std::size_t n, std::size_t m) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              g;
      auto rec = [&](auto&& self, std::size_t lo) -> void {
        if (g.size() == n + 1) {
          out.push_back(g);
          return;
        }
        for (std::size_t v = lo; v <= m; ++v) {
          g.push_back(v);
          self(self, v);
          g.pop_back();
        }
      };
      rec(rec, 0);
      return out;
    }

    CyclicWord random_cyclic_word(Rng& rng, std::size_t bound, std::size_t length) {
      CyclicWord  w;
      std::size_t level = uniform(rng, bound + 1);
      for (std::size_t k = 0; k < length; ++k) {
        std::vector<CyclicGenerator> options{CyclicGenerator::cyclic(level)};
        for (std::size_t i = 0; level >= 1 && i <= level; ++i) {
          options.push_back(CyclicGenerator::face(level, i));
        }
        for (std::size_t j = 0; level + 1 <= bound && j <= level; ++j) {
          options.push_back(CyclicGenerator::degeneracy(level, j));
        }
        auto g = options[uniform(rng, options.size())];
        w.push_back(g);
        level = g.source();
      }
      return w;
    }

    void record(SuiteResult& r, bool ok, std::string const& what) {
      ++r.checked;
      if (!ok) {
        if (r.failures == 0) {
          r.first_failure = what;
        }
        ++r.failures;
      }
    }

    // Ranked composition table for Hom([t],[u]) x Hom([s],[t]) -> Hom([s],[u]).
    struct Table {
      std::size_t                left = 0, right = 0;
      std::vector<std::uint16_t> data;

      std::uint16_t const* row(std::size_t f1) const {
        return data.data() + f1 * right;
      }
    };

    bool is_identity(DeltaSMorphism const& f) {
      return f.source() == f.target() && f == DeltaSMorphism::identity(f.source());
    }

  }  // namespace

  SuiteResult exhaustive_associativity(std::size_t bound) {
    SuiteResult r{"associativity", 0, 0, {}};
    std::size_t const                        k = bound + 1;
    std::vector<std::vector<DeltaSMorphism>> homs(k * k);
    for (std::size_t n = 0; n < k; ++n) {
      for (std::size_t m = 0; m < k; ++m) {
        homs[n * k + m] = all_morphisms(n, m);
        if (homs[n * k + m].size() > 65535) {
          throw ValidationError("associativity tables limited to 65535 morphisms per hom-set");
        }
      }
    }
    auto hom = [&](std::size_t n, std::size_t m) -> std::vector<DeltaSMorphism> const& {
      return homs[n * k + m];
    };
    std::vector<Table> tables(k * k * k);
    auto table = [&](std::size_t s, std::size_t t, std::size_t u) -> Table& {
      return tables[(s * k + t) * k + u];
    };
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t u = 0; u < k; ++u) {
          auto& tb = table(s, t, u);
          tb.left  = hom(t, u).size();
          tb.right = hom(s, t).size();
          tb.data.resize(tb.left * tb.right);
          for (std::size_t a = 0; a < tb.left; ++a) {
            for (std::size_t b = 0; b < tb.right; ++b) {
              auto c = compose_deltaS(hom(t, u)[a], hom(s, t)[b]);
              tb.data[a * tb.right + b] = static_cast<std::uint16_t>(rank_morphism(c));
            }
          }
        }
      }
    }
    // (f1 f2) f3 = f1 (f2 f3) with f3: [p] -> [s], f2: [s] -> [t], f1: [t] -> [u]
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t < k; ++t) {
          for (std::size_t u = 0; u < k; ++u) {
            auto const& t_stu = table(s, t, u);
            auto const& t_ptu = table(p, t, u);
            auto const& t_pst = table(p, s, t);
            auto const& t_psu = table(p, s, u);
            std::size_t const n3 = hom(p, s).size();
            for (std::size_t f1 = 0; f1 < t_stu.left; ++f1) {
              for (std::size_t f2 = 0; f2 < t_stu.right; ++f2) {
                auto const* lhs   = t_psu.row(t_stu.row(f1)[f2]);
                auto const* inner = t_pst.row(f2);
                auto const* rhs   = t_ptu.row(f1);
                std::size_t bad   = 0;
                for (std::size_t f3 = 0; f3 < n3; ++f3) {
                  bad += lhs[f3] != rhs[inner[f3]] ? 1 : 0;
                }
                r.checked += n3;
                if (bad != 0) {
                  if (r.failures == 0) {
                    r.first_failure = "f1 = " + hom(t, u)[f1].to_string() + ", f2 = "
                                      + hom(s, t)[f2].to_string();
                  }
                  r.failures += bad;
                }
              }
            }
          }
        }
      }
    }
    return r;
  }

  std::vector<SuiteResult> run_crossed_suites(CrossedSuiteOptions const& opts) {
    if (opts.exhaustive_bound > 4) {
      throw ValidationError("exhaustive bound must be at most 4");
    }
    std::size_t const E = opts.exhaustive_bound;
    std::size_t const R = std::max(opts.random_bound, E);
    Rng               rng(opts.seed);
    std::vector<SuiteResult> results;

    // 1. associativity
    {
      auto r = exhaustive_associativity(std::min<std::size_t>(E, 3));
      for (std::size_t k = 0; k < opts.random_samples; ++k) {
        std::size_t a = uniform(rng, R + 1), b = uniform(rng, R + 1), c = uniform(rng, R + 1),
                    d = uniform(rng, R + 1);
        auto f3 = random_morphism(rng, a, b);
        auto f2 = random_morphism(rng, b, c);
        auto f1 = random_morphism(rng, c, d);
        record(r, compose_deltaS(compose_deltaS(f1, f2), f3) == compose_deltaS(f1, compose_deltaS(f2, f3)),
               f1.to_string() + " o " + f2.to_string() + " o " + f3.to_string());
      }
      results.push_back(std::move(r));
    }

    // 2. unique factorization g o sigma
    {
      SuiteResult r{"factorization", 0, 0, {}};
      auto check = [&](DeltaSMorphism const& f) {
        auto fac = factorize_sym(f);
        bool ok  = std::is_sorted(fac.g.begin(), fac.g.end()) && recompose(fac) == f;
        auto s   = fac.sigma;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
          ok = ok && s[i] == i;
        }
        record(r, ok, f.to_string());
      };
      for (std::size_t n = 0; n <= E; ++n) {
        for (std::size_t m = 0; m <= E; ++m) {
          for (auto const& f : all_morphisms(n, m)) {
            check(f);
          }
          // Uniqueness: (g, sigma) -> g o sigma is injective on all pairs.
          std::vector<bool>        hit(hom_count(n, m), false);
          std::vector<std::size_t> sigma(n + 1);
          std::iota(sigma.begin(), sigma.end(), 0);
          auto const monotone = monotone_maps(n, m);
          do {
            auto const perm = permutation_morphism(sigma);
            for (auto const& g : monotone) {
              auto f   = compose_deltaS(monotone_morphism(g, m), perm);
              auto idx = rank_morphism(f);
              record(r, !hit[idx], "two factorizations of " + f.to_string());
              hit[idx] = true;
            }
          } while (std::next_permutation(sigma.begin(), sigma.end()));
          record(r, std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }),
                 "factorizations do not cover Hom([" + std::to_string(n) + "], [" + std::to_string(m) + "])");
        }
      }
      for (std::size_t k = 0; k < opts.random_samples; ++k) {
        check(random_morphism(rng, uniform(rng, R + 1), uniform(rng, R + 1)));
      }
      results.push_back(std::move(r));
    }

    // 3. automorphism counts
    {
      SuiteResult r{"aut counts", 0, 0, {}};
      for (std::size_t n = 0; n <= std::max<std::size_t>(E, 4); ++n) {
        auto const  all = all_morphisms(n, n);
        std::size_t sym = 0, cyc = 0;
        for (auto const& f : all) {
          bool invertible = false;
          if (n <= 3) {
            for (auto const& g : all) {
              if (is_identity(compose_deltaS(f, g)) && is_identity(compose_deltaS(g, f))) {
                invertible = true;
                break;
              }
            }
          } else {
            // f o g = id forces every monomial of f to be nonempty, hence of
            // length one; such f are permutations, whose inverse is checked.
            bool singletons = std::all_of(f.monomials().begin(), f.monomials().end(),
                                          [](auto const& mono) { return mono.size() == 1; });
            if (singletons) {
              auto fac = factorize_sym(f);
              std::vector<std::size_t> inv(n + 1);
              for (std::size_t i = 0; i <= n; ++i) {
                inv[fac.sigma[i]] = i;
              }
              auto g     = permutation_morphism(inv);
              invertible = is_identity(compose_deltaS(f, g)) && is_identity(compose_deltaS(g, f));
            }
          }
          if (invertible) {
            ++sym;
            cyc += is_cyclic(f) ? 1 : 0;
          }
        }
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n + 1; ++i) {
          fact *= i;
        }
        record(r, sym == fact, "|Aut_S([" + std::to_string(n) + "])| = " + std::to_string(sym));
        record(r, cyc == n + 1, "|Aut_C([" + std::to_string(n) + "])| = " + std::to_string(cyc));
      }
      results.push_back(std::move(r));
    }

    // 4. psi_sym o iota = psi_cyc
    {
      SuiteResult r{"psi_sym o iota = psi_cyc", 0, 0, {}};
      for (std::size_t n = 0; n <= std::max<std::size_t>(R, 4); ++n) {
        std::vector<CyclicGenerator> gens{CyclicGenerator::cyclic(n)};
        for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
          gens.push_back(CyclicGenerator::face(n, i));
        }
        for (std::size_t j = 0; j <= n; ++j) {
          gens.push_back(CyclicGenerator::degeneracy(n, j));
        }
        for (auto const& g : gens) {
          record(r, psi_sym(iota(g)) == psi_cyc(g), g.to_string());
        }
      }
      for (std::size_t k = 0; k < opts.random_samples; ++k) {
        auto w  = random_cyclic_word(rng, R, 1 + uniform(rng, 6));
        auto f  = iota(w);
        bool ok = psi_sym(f) == psi_cyc(w) && is_cyclic(f);
        std::string name;
        for (auto const& g : w) {
          name += g.to_string() + " ";
        }
        record(r, ok, name);
      }
      results.push_back(std::move(r));
    }

    // 5. row property and abelianization
    {
      SuiteResult r{"row property", 0, 0, {}};
      auto check = [&](DeltaSMorphism const& f) {
        auto a  = abelianize_psi_sym(f);
        bool ok = a == abelianize_hom(psi_sym(f));
        for (std::size_t i = 0; i < a.rows(); ++i) {
          BigInt sum = 0;
          for (std::size_t j = 0; j < a.cols(); ++j) {
            ok  = ok && (a(i, j) == 0 || a(i, j) == 1);
            sum += a(i, j);
          }
          ok = ok && sum == 1;
        }
        record(r, ok, f.to_string());
      };
      for (std::size_t n = 0; n <= std::max<std::size_t>(E, 4); ++n) {
        for (std::size_t m = 0; m <= std::max<std::size_t>(E, 4); ++m) {
          for (auto const& f : all_morphisms(n, m)) {
            check(f);
          }
        }
      }
      for (std::size_t k = 0; k < opts.random_samples; ++k) {
        std::size_t a = uniform(rng, R + 1), b = uniform(rng, R + 1), c = uniform(rng, R + 1);
        auto        f2 = random_morphism(rng, a, b);
        auto        f1 = random_morphism(rng, b, c);
        auto        f  = compose_deltaS(f1, f2);
        check(f);
        record(r, abelianize_psi_sym(f) == abelianize_psi_sym(f2) * abelianize_psi_sym(f1),
               "abelianization of " + f1.to_string() + " o " + f2.to_string());
        record(r, psi_sym(f) == compose_hom(psi_sym(f2), psi_sym(f1)),
               "psi_sym of " + f1.to_string() + " o " + f2.to_string());
      }
      results.push_back(std::move(r));
    }

    // 6. lifting square: forgetting decorations recovers psi_sym
    {
      SuiteResult r{"lifting square", 0, 0, {}};
      auto check = [&](DeltaSMorphism const& f, std::int64_t k) {
        bool ok = false;
        try {
          auto lift = psi_tilde_sym(f, k);
          ok = lift.hom == psi_sym(f) && lift.target.arity == f.source() + 1
               && lift.target.decoration == std::vector<std::int64_t>(f.source() + 1, k);
        } catch (InvariantViolation const&) {
          ok = false;
        }
        record(r, ok, f.to_string() + " with decoration " + std::to_string(k));
      };
      for (std::size_t n = 0; n <= E; ++n) {
        for (std::size_t m = 0; m <= E; ++m) {
          for (auto const& f : all_morphisms(n, m)) {
            for (std::int64_t k : {0, 1, 2}) {
              check(f, k);
            }
          }
        }
      }
      for (std::size_t k = 0; k < opts.random_samples; ++k) {
        check(random_morphism(rng, uniform(rng, R + 1), uniform(rng, R + 1)),
              static_cast<std::int64_t>(uniform(rng, 5)) - 2);
      }
      results.push_back(std::move(r));
    }
    return results;
  }

}  // namespace repchar
