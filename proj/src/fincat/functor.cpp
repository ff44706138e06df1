//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/fincat/functor.hpp"

#include <map>
#include <tuple>

#include "repchar/errors.hpp"

namespace repchar {

  SetFunctor SetFunctor::constant(FinCategory const& c, std::size_t size) {
    SetFunctor f;
    f.sizes.assign(c.num_objects(), size);
    std::vector<std::size_t> id(size);
    for (std::size_t x = 0; x < size; ++x) {
      id[x] = x;
    }
    f.maps.assign(c.num_morphisms(), id);
    return f;
  }

  SetFunctor SetFunctor::regular(FiniteGroup const& g) {
    SetFunctor f;
    f.sizes = {g.order()};
    for (std::size_t a = 0; a < g.order(); ++a) {
      std::vector<std::size_t> m(g.order());
      for (std::size_t x = 0; x < g.order(); ++x) {
        m[x] = g.mul(a, x);
      }
      f.maps.push_back(std::move(m));
    }
    return f;
  }

  std::optional<std::string> check_set_functor(FinCategory const& c, SetFunctor const& f) {
    if (f.sizes.size() != c.num_objects() || f.maps.size() != c.num_morphisms()) {
      return "set functor data do not match the category";
    }
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      auto const& map = f.maps[m];
      if (map.size() != f.sizes[c.source(m)]) {
        return "map of morphism " + std::to_string(m) + " has the wrong domain size";
      }
      for (auto y : map) {
        if (y >= f.sizes[c.target(m)]) {
          return "map of morphism " + std::to_string(m) + " leaves its codomain";
        }
      }
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      auto const& map = f.maps[c.identity(x)];
      for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] != i) {
          return "identity of object " + c.object_label(x) + " does not act trivially";
        }
      }
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        if (c.target(m) != c.source(g)) {
          continue;
        }
        auto const& gm = f.maps[c.compose(g, m)];
        for (std::size_t x = 0; x < gm.size(); ++x) {
          if (gm[x] != f.maps[g][f.maps[m][x]]) {
            return "F(" + std::to_string(g) + " o " + std::to_string(m) + ") differs from the composite on element "
                   + std::to_string(x);
          }
        }
      }
    }
    return std::nullopt;
  }

  ModuleFunctor ModuleFunctor::constant(FinCategory const& c, Variance v, std::size_t dim) {
    ModuleFunctor m;
    m.variance = v;
    m.dims.assign(c.num_objects(), dim);
    m.maps.assign(c.num_morphisms(), SparseMatrix::identity(dim));
    return m;
  }

  ModuleFunctor ModuleFunctor::zero(FinCategory const& c, Variance v) {
    return constant(c, v, 0);
  }

  std::optional<std::string> check_module_functor(FinCategory const& c, ModuleFunctor const& m) {
    if (m.dims.size() != c.num_objects() || m.maps.size() != c.num_morphisms()) {
      return "module functor data do not match the category";
    }
    bool const co = m.variance == Variance::covariant;
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      std::size_t rows = m.dims[co ? c.target(f) : c.source(f)];
      std::size_t cols = m.dims[co ? c.source(f) : c.target(f)];
      if (m.maps[f].rows() != rows || m.maps[f].cols() != cols) {
        return "matrix of morphism " + std::to_string(f) + " is " + std::to_string(m.maps[f].rows())
               + "x" + std::to_string(m.maps[f].cols()) + ", expected " + std::to_string(rows) + "x"
               + std::to_string(cols);
      }
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      if (!(m.maps[c.identity(x)] == SparseMatrix::identity(m.dims[x]))) {
        return "identity of object " + c.object_label(x) + " is not sent to the identity matrix";
      }
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        if (c.target(f) != c.source(g)) {
          continue;
        }
        auto expect = co ? m.maps[g] * m.maps[f] : m.maps[f] * m.maps[g];
        if (!(m.maps[c.compose(g, f)] == expect)) {
          return "composition " + std::to_string(g) + " o " + std::to_string(f) + " is not preserved";
        }
      }
    }
    return std::nullopt;
  }

  ModuleFunctor linearize(FinCategory const& c, SetFunctor const& f) {
    if (auto err = check_set_functor(c, f)) {
      throw ValidationError("not a functor: " + *err);
    }
    ModuleFunctor m;
    m.variance = Variance::covariant;
    m.dims     = f.sizes;
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      SparseMatrix::Builder b(f.sizes[c.target(g)], f.sizes[c.source(g)]);
      for (std::size_t x = 0; x < f.maps[g].size(); ++x) {
        b.add(f.maps[g][x], x, 1);
      }
      m.maps.push_back(std::move(b).build());
    }
    return m;
  }

  ModuleFunctor pullback(ModuleFunctor const& m, FinFunctor const& p) {
    ModuleFunctor out;
    out.variance = m.variance;
    for (auto x : p.on_objects) {
      out.dims.push_back(m.dims.at(x));
    }
    for (auto f : p.on_morphisms) {
      out.maps.push_back(m.maps.at(f));
    }
    return out;
  }

  CatDiagram CatDiagram::discrete(FinCategory const& c, SetFunctor const& f) {
    if (auto err = check_set_functor(c, f)) {
      throw ValidationError("not a functor: " + *err);
    }
    CatDiagram d;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      std::vector<std::string>           objects;
      std::vector<FinCategory::Morphism> morphisms;
      std::vector<std::size_t>           ids;
      for (std::size_t e = 0; e < f.sizes[x]; ++e) {
        objects.push_back(std::to_string(e));
        morphisms.push_back({e, e, "id"});
        ids.push_back(e);
      }
      d.values.emplace_back(std::move(objects), std::move(morphisms), std::move(ids),
                            std::vector<FinCategory::Composite>{});
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      d.maps.push_back({f.maps[g], f.maps[g]});
    }
    return d;
  }

  std::optional<std::string> check_cat_diagram(FinCategory const& c, CatDiagram const& d) {
    if (d.values.size() != c.num_objects() || d.maps.size() != c.num_morphisms()) {
      return "diagram data do not match the category";
    }
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      if (auto err = check_functor(d.values[c.source(f)], d.values[c.target(f)], d.maps[f])) {
        return "F(" + std::to_string(f) + ") is not a functor: " + *err;
      }
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      auto const& m  = d.maps[c.identity(x)];
      auto const  id = FinFunctor::identity(d.values[x]);
      if (m.on_objects != id.on_objects || m.on_morphisms != id.on_morphisms) {
        return "F(identity of " + c.object_label(x) + ") is not the identity functor";
      }
    }
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
        if (c.target(f) != c.source(g)) {
          continue;
        }
        auto composite = compose_functors(d.maps[g], d.maps[f]);
        auto const& direct = d.maps[c.compose(g, f)];
        if (composite.on_objects != direct.on_objects || composite.on_morphisms != direct.on_morphisms) {
          return "F(" + std::to_string(g) + " o " + std::to_string(f) + ") is not F(g) F(f)";
        }
      }
    }
    return std::nullopt;
  }

  Grothendieck grothendieck(FinCategory const& c, CatDiagram const& d) {
    if (auto err = check_cat_diagram(c, d)) {
      throw ValidationError("not a diagram of categories: " + *err);
    }
    Grothendieck g;
    std::vector<std::size_t> first_object(c.num_objects());
    std::vector<std::string> objects;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      first_object[x] = objects.size();
      for (std::size_t e = 0; e < d.values[x].num_objects(); ++e) {
        objects.push_back("(" + c.object_label(x) + "," + d.values[x].object_label(e) + ")");
        g.projection.on_objects.push_back(x);
        g.object_fibre.push_back(e);
      }
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
    std::vector<FinCategory::Morphism>                                        morphisms;
    struct Parts {
      std::size_t phi, x, f;
    };
    std::vector<Parts> parts;
    for (std::size_t phi = 0; phi < c.num_morphisms(); ++phi) {
      auto const& src = d.values[c.source(phi)];
      auto const& tgt = d.values[c.target(phi)];
      auto const& F   = d.maps[phi];
      for (std::size_t x = 0; x < src.num_objects(); ++x) {
        std::size_t y0 = F.on_objects[x];
        for (std::size_t f = 0; f < tgt.num_morphisms(); ++f) {
          if (tgt.source(f) != y0) {
            continue;
          }
          index[{phi, x, f}] = morphisms.size();
          morphisms.push_back({first_object[c.source(phi)] + x, first_object[c.target(phi)] + tgt.target(f),
                               "(" + c.morphism(phi).label + "," + tgt.morphism(f).label + ")"});
          parts.push_back({phi, x, f});
          g.projection.on_morphisms.push_back(phi);
          g.morphism_fibre.push_back(f);
        }
      }
    }
    std::vector<std::size_t> identities;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      for (std::size_t e = 0; e < d.values[x].num_objects(); ++e) {
        identities.push_back(index.at({c.identity(x), e, d.values[x].identity(e)}));
      }
    }
    std::vector<FinCategory::Composite> comps;
    for (std::size_t a = 0; a < morphisms.size(); ++a) {
      for (std::size_t b = 0; b < morphisms.size(); ++b) {
        if (morphisms[b].target != morphisms[a].source) {
          continue;
        }
        // (psi, g) o (phi, f) = (psi phi, g o F(psi)(f))
        auto const& outer = parts[a];
        auto const& inner = parts[b];
        std::size_t psi   = outer.phi;
        auto const& fibre = d.values[c.target(psi)];
        std::size_t moved = d.maps[psi].on_morphisms[inner.f];
        std::size_t h     = fibre.compose(outer.f, moved);
        comps.push_back({a, b, index.at({c.compose(psi, inner.phi), inner.x, h})});
      }
    }
    g.category = FinCategory(std::move(objects), std::move(morphisms), std::move(identities), comps);
    return g;
  }

  Grothendieck category_of_elements(FinCategory const& c, SetFunctor const& f) {
    return grothendieck(c, CatDiagram::discrete(c, f));
  }

}  // namespace repchar
