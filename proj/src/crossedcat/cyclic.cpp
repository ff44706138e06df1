//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/crossedcat/cyclic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "repchar/errors.hpp"

namespace repchar {

  DeltaSMorphism iota(CyclicGenerator const& gen) {
    gen.check();
    std::size_t const                     n = gen.n;
    std::vector<DeltaSMorphism::Monomial> monos;
    switch (gen.kind) {
      case CyclicGenerator::Kind::face:
        // [n] -> [n-1]
        if (gen.i < n) {
          for (std::uint32_t k = 0; k <= n; ++k) {
            if (k == gen.i + 1) {
              monos.back().push_back(k);
            } else {
              monos.push_back({k});
            }
          }
        } else {
          monos.push_back({static_cast<std::uint32_t>(n), 0});
          for (std::uint32_t k = 1; k < n; ++k) {
            monos.push_back({k});
          }
        }
        return DeltaSMorphism(n, std::move(monos));
      case CyclicGenerator::Kind::degeneracy:
        // [n] -> [n+1]
        for (std::uint32_t k = 0; k <= n; ++k) {
          monos.push_back({k});
          if (k == gen.i) {
            monos.emplace_back();
          }
        }
        return DeltaSMorphism(n, std::move(monos));
      case CyclicGenerator::Kind::cyclic:
        break;
    }
    monos.push_back({static_cast<std::uint32_t>(n)});
    for (std::uint32_t k = 0; k < n; ++k) {
      monos.push_back({k});
    }
    return DeltaSMorphism(n, std::move(monos));
  }

  DeltaSMorphism iota(CyclicWord const& w) {
    word_source(w);
    // contravariant: iota(w0 o w1) = iota(w1) o iota(w0)
    DeltaSMorphism f = iota(w.front());
    for (std::size_t k = 1; k < w.size(); ++k) {
      f = compose_deltaS(iota(w[k]), f);
    }
    return f;
  }

  GroupHom psi_cyc(CyclicGenerator const& gen) {
    gen.check();
    std::size_t const     n = gen.n;
    std::vector<FreeWord> images;
    switch (gen.kind) {
      case CyclicGenerator::Kind::face:
        // <n> -> <n+1>
        for (std::size_t k = 0; k < n; ++k) {
          if (gen.i == n && k == 0) {
            images.push_back(FreeWord::generator(n) * FreeWord::generator(0));
          } else if (gen.i < n && k == gen.i) {
            images.push_back(FreeWord::generator(k) * FreeWord::generator(k + 1));
          } else if (gen.i < n && k > gen.i) {
            images.push_back(FreeWord::generator(k + 1));
          } else {
            images.push_back(FreeWord::generator(k));
          }
        }
        return GroupHom(n, n + 1, std::move(images));
      case CyclicGenerator::Kind::degeneracy:
        // <n+2> -> <n+1>
        for (std::size_t k = 0; k <= n + 1; ++k) {
          if (k <= gen.i) {
            images.push_back(FreeWord::generator(k));
          } else if (k == gen.i + 1) {
            images.emplace_back();
          } else {
            images.push_back(FreeWord::generator(k - 1));
          }
        }
        return GroupHom(n + 2, n + 1, std::move(images));
      case CyclicGenerator::Kind::cyclic:
        break;
    }
    images.push_back(FreeWord::generator(n));
    for (std::size_t k = 0; k < n; ++k) {
      images.push_back(FreeWord::generator(k));
    }
    return GroupHom(n + 1, n + 1, std::move(images));
  }

  GroupHom psi_cyc(CyclicWord const& w) {
    word_source(w);
    GroupHom h = psi_cyc(w.back());
    for (std::size_t k = w.size() - 1; k-- > 0;) {
      h = compose_hom(psi_cyc(w[k]), h);
    }
    return h;
  }

  bool cyclic_by_rotation(DeltaSMorphism const& f) {
    auto              c = f.concatenation();
    std::size_t const n = f.source();
    std::size_t const r = c[0];
    for (std::size_t p = 0; p <= n; ++p) {
      if (c[p] != (r + p) % (n + 1)) {
        return false;
      }
    }
    return true;
  }

  namespace {

    // Breadth-first closure of identities under postcomposition with the
    // iota-images of generators, restricted to arities <= bound.
    class ClosureTable {
     public:
      explicit ClosureTable(std::size_t bound) : _bound(bound) {
        std::vector<DeltaSMorphism> gens;
        for (std::size_t n = 0; n <= bound; ++n) {
          gens.push_back(iota(CyclicGenerator::cyclic(n)));
          for (std::size_t i = 0; i <= n && n >= 1; ++i) {
            gens.push_back(iota(CyclicGenerator::face(n, i)));
          }
          for (std::size_t j = 0; j <= n && n + 1 <= bound; ++j) {
            gens.push_back(iota(CyclicGenerator::degeneracy(n, j)));
          }
        }
        std::vector<DeltaSMorphism> frontier;
        for (std::size_t n = 0; n <= bound; ++n) {
          frontier.push_back(DeltaSMorphism::identity(n));
          _members.insert(frontier.back());
        }
        while (!frontier.empty()) {
          std::vector<DeltaSMorphism> next;
          for (auto const& f : frontier) {
            for (auto const& g : gens) {
              if (g.source() != f.target() || g.target() > bound) {
                continue;
              }
              auto h = compose_deltaS(g, f);
              if (_members.insert(h).second) {
                next.push_back(std::move(h));
              }
            }
          }
          frontier = std::move(next);
        }
      }

      bool contains(DeltaSMorphism const& f) const {
        return _members.count(f) > 0;
      }

      std::size_t count(std::size_t n, std::size_t m) const {
        std::size_t c = 0;
        for (auto const& f : _members) {
          c += (f.source() == n && f.target() == m) ? 1 : 0;
        }
        return c;
      }

     private:
      std::size_t              _bound;
      std::set<DeltaSMorphism> _members;
    };

    ClosureTable const& closure(std::size_t bound) {
      static std::mutex                                             mutex;
      static std::map<std::size_t, std::unique_ptr<ClosureTable>> tables;
      std::lock_guard<std::mutex>                                   lock(mutex);
      auto&                                                         slot = tables[bound];
      if (!slot) {
        slot = std::make_unique<ClosureTable>(bound);
      }
      return *slot;
    }

  }  // namespace

  bool is_cyclic_by_closure(DeltaSMorphism const& f, std::size_t bound) {
    if (f.source() > bound || f.target() > bound) {
      throw ValidationError("morphism " + f.to_string() + " is beyond the closure bound "
                            + std::to_string(bound));
    }
    return closure(bound).contains(f);
  }

  bool is_cyclic(DeltaSMorphism const& f, std::size_t bound) {
    if (f.source() <= bound && f.target() <= bound) {
      return is_cyclic_by_closure(f, bound);
    }
    return cyclic_by_rotation(f);
  }

  std::size_t cyclic_closure_count(std::size_t n, std::size_t m, std::size_t bound) {
    return closure(bound).count(n, m);
  }

}  // namespace repchar
