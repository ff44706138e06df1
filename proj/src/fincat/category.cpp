//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/fincat/category.hpp"

#include <map>

#include "repchar/errors.hpp"

namespace repchar {

  FinCategory::FinCategory(std::vector<std::string>      objects,
                           std::vector<Morphism>         morphisms,
                           std::vector<std::size_t>      identities,
                           std::vector<Composite> const& composites)
      : _objects(std::move(objects)), _morphisms(std::move(morphisms)), _identities(std::move(identities)) {
    std::size_t const M = _morphisms.size();
    if (_identities.size() != _objects.size()) {
      throw ValidationError("category needs one identity per object");
    }
    for (std::size_t f = 0; f < M; ++f) {
      if (_morphisms[f].source >= _objects.size() || _morphisms[f].target >= _objects.size()) {
        throw ValidationError("morphism " + std::to_string(f) + " has an unknown endpoint");
      }
    }
    for (std::size_t c = 0; c < _objects.size(); ++c) {
      auto id = _identities[c];
      if (id >= M || _morphisms[id].source != c || _morphisms[id].target != c) {
        throw ValidationError("identity of object " + _objects[c] + " is not an endomorphism of it");
      }
    }
    _table.assign(M * M, none);
    auto set = [&](std::size_t g, std::size_t f, std::size_t h) {
      if (g >= M || f >= M || h >= M) {
        throw ValidationError("composition triple refers to an unknown morphism");
      }
      if (target(f) != source(g)) {
        throw ValidationError("composition of non-composable morphisms " + std::to_string(g)
                              + " o " + std::to_string(f));
      }
      if (source(h) != source(f) || target(h) != target(g)) {
        throw ValidationError("composite " + std::to_string(g) + " o " + std::to_string(f)
                              + " has the wrong endpoints");
      }
      auto& slot = _table[g * M + f];
      if (slot != none && slot != h) {
        throw ValidationError("conflicting composites for " + std::to_string(g) + " o "
                              + std::to_string(f));
      }
      slot = h;
    };
    for (std::size_t f = 0; f < M; ++f) {
      set(_identities[target(f)], f, f);
      set(f, _identities[source(f)], f);
    }
    for (auto const& t : composites) {
      set(t.g, t.f, t.h);
    }
    if (auto err = check_axioms()) {
      throw ValidationError("not a category: " + *err);
    }
    index();
  }

  void FinCategory::index() {
    _non_identities.clear();
    _out.assign(_objects.size(), {});
    for (std::size_t f = 0; f < _morphisms.size(); ++f) {
      if (!is_identity(f)) {
        _non_identities.push_back(f);
        _out[source(f)].push_back(f);
      }
    }
  }

  std::optional<std::string> FinCategory::check_axioms() const {
    std::size_t const M = _morphisms.size();
    for (std::size_t g = 0; g < M; ++g) {
      for (std::size_t f = 0; f < M; ++f) {
        bool composable = target(f) == source(g);
        if (composable && _table[g * M + f] == none) {
          return "missing composite " + std::to_string(g) + " o " + std::to_string(f);
        }
        if (!composable && _table[g * M + f] != none) {
          return "composite given for non-composable " + std::to_string(g) + " o " + std::to_string(f);
        }
      }
    }
    for (std::size_t f = 0; f < M; ++f) {
      if (_table[_identities[target(f)] * M + f] != f || _table[f * M + _identities[source(f)]] != f) {
        return "identity law fails for morphism " + std::to_string(f);
      }
    }
    for (std::size_t h = 0; h < M; ++h) {
      for (std::size_t g = 0; g < M; ++g) {
        if (target(g) != source(h)) {
          continue;
        }
        auto hg = _table[h * M + g];
        for (std::size_t f = 0; f < M; ++f) {
          if (target(f) != source(g)) {
            continue;
          }
          if (_table[hg * M + f] != _table[h * M + _table[g * M + f]]) {
            return "associativity fails for (" + std::to_string(h) + ", " + std::to_string(g)
                   + ", " + std::to_string(f) + ")";
          }
        }
      }
    }
    return std::nullopt;
  }

  std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
    std::size_t const M = _morphisms.size();
    if (g >= M || f >= M || target(f) != source(g)) {
      throw ValidationError("morphisms " + std::to_string(g) + " and " + std::to_string(f)
                            + " are not composable");
    }
    return _table[g * M + f];
  }

  FinCategory FinCategory::from_group(FiniteGroup const& g) {
    std::vector<Morphism> morphisms;
    for (std::size_t a = 0; a < g.order(); ++a) {
      morphisms.push_back({0, 0, g.label(a)});
    }
    std::vector<Composite> comps;
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) {
        comps.push_back({a, b, g.mul(a, b)});
      }
    }
    return FinCategory({"*"}, std::move(morphisms), {g.identity()}, comps);
  }

  FinCategory FinCategory::from_presentation(GroupPresentation const& p, std::size_t max_cosets) {
    return from_group(FiniteGroup::from_presentation(p, max_cosets));
  }

  FinCategory FinCategory::from_poset(std::vector<std::vector<bool>> const& leq) {
    std::size_t const n = leq.size();
    std::vector<std::string> objects;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::vector<Morphism>    morphisms;
    std::vector<std::size_t> identities(n);
    for (std::size_t a = 0; a < n; ++a) {
      objects.push_back(std::to_string(a));
      if (leq[a].size() != n || !leq[a][a]) {
        throw ValidationError("poset relation is not reflexive at " + std::to_string(a));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a][b]) {
          if (a != b && leq[b][a]) {
            throw ValidationError("poset relation is not antisymmetric");
          }
          index[{a, b}] = morphisms.size();
          if (a == b) {
            identities[a] = morphisms.size();
          }
          morphisms.push_back({a, b, std::to_string(a) + "<=" + std::to_string(b)});
        }
      }
    }
    std::vector<Composite> comps;
    for (auto const& [ab, f] : index) {
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[ab.second][c]) {
          auto ac = index.find({ab.first, c});
          if (ac == index.end()) {
            throw ValidationError("poset relation is not transitive");
          }
          comps.push_back({index.at({ab.second, c}), f, ac->second});
        }
      }
    }
    return FinCategory(std::move(objects), std::move(morphisms), std::move(identities), comps);
  }

  FinCategory FinCategory::trivial() {
    return FinCategory({"*"}, {{0, 0, "id"}}, {0}, {});
  }

  FinFunctor FinFunctor::identity(FinCategory const& c) {
    FinFunctor f;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      f.on_objects.push_back(x);
    }
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      f.on_morphisms.push_back(m);
    }
    return f;
  }

  FinFunctor FinFunctor::collapse(FinCategory const& c) {
    return {std::vector<std::size_t>(c.num_objects(), 0), std::vector<std::size_t>(c.num_morphisms(), 0)};
  }

  std::optional<std::string> check_functor(FinCategory const& s, FinCategory const& t, FinFunctor const& f) {
    if (f.on_objects.size() != s.num_objects() || f.on_morphisms.size() != s.num_morphisms()) {
      return "functor data do not match the source category";
    }
    for (auto x : f.on_objects) {
      if (x >= t.num_objects()) {
        return "object image out of range";
      }
    }
    for (std::size_t m = 0; m < s.num_morphisms(); ++m) {
      auto fm = f.on_morphisms[m];
      if (fm >= t.num_morphisms()) {
        return "morphism image out of range";
      }
      if (t.source(fm) != f.on_objects[s.source(m)] || t.target(fm) != f.on_objects[s.target(m)]) {
        return "morphism " + std::to_string(m) + " is sent to a morphism with the wrong endpoints";
      }
    }
    for (std::size_t c = 0; c < s.num_objects(); ++c) {
      if (f.on_morphisms[s.identity(c)] != t.identity(f.on_objects[c])) {
        return "identity of object " + s.object_label(c) + " is not preserved";
      }
    }
    for (std::size_t g = 0; g < s.num_morphisms(); ++g) {
      for (std::size_t m = 0; m < s.num_morphisms(); ++m) {
        if (s.target(m) != s.source(g)) {
          continue;
        }
        if (f.on_morphisms[s.compose(g, m)] != t.compose(f.on_morphisms[g], f.on_morphisms[m])) {
          return "composition " + std::to_string(g) + " o " + std::to_string(m) + " is not preserved";
        }
      }
    }
    return std::nullopt;
  }

  FinFunctor compose_functors(FinFunctor const& g, FinFunctor const& f) {
    FinFunctor h;
    for (auto x : f.on_objects) {
      h.on_objects.push_back(g.on_objects.at(x));
    }
    for (auto m : f.on_morphisms) {
      h.on_morphisms.push_back(g.on_morphisms.at(m));
    }
    return h;
  }

  Subcategory full_subcategory(FinCategory const& c, std::vector<std::size_t> const& objects) {
    std::vector<std::size_t> local(c.num_objects(), FinCategory::none);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      local.at(objects[i]) = i;
      labels.push_back(c.object_label(objects[i]));
    }
    std::vector<FinCategory::Morphism> morphisms;
    std::vector<std::size_t>           global, local_morphism(c.num_morphisms(), FinCategory::none);
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      auto const& mm = c.morphism(m);
      if (local[mm.source] != FinCategory::none && local[mm.target] != FinCategory::none) {
        local_morphism[m] = morphisms.size();
        morphisms.push_back({local[mm.source], local[mm.target], mm.label});
        global.push_back(m);
      }
    }
    std::vector<std::size_t> identities;
    for (auto x : objects) {
      identities.push_back(local_morphism[c.identity(x)]);
    }
    std::vector<FinCategory::Composite> comps;
    for (std::size_t g = 0; g < morphisms.size(); ++g) {
      for (std::size_t f = 0; f < morphisms.size(); ++f) {
        if (morphisms[f].target == morphisms[g].source) {
          comps.push_back({g, f, local_morphism[c.compose(global[g], global[f])]});
        }
      }
    }
    Subcategory sub{FinCategory(std::move(labels), std::move(morphisms), std::move(identities), comps), {}};
    sub.inclusion.on_objects  = objects;
    sub.inclusion.on_morphisms = global;
    return sub;
  }

}  // namespace repchar
