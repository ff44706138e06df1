//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/groupkit/simplicial_group.hpp"

#include <algorithm>
#include <sstream>

#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    std::string describe_difference(GroupHom const& a, GroupHom const& b) {
      for (std::size_t g = 0; g < a.source_rank(); ++g) {
        if (a.image(g) != b.image(g)) {
          return "generator " + std::to_string(g) + ": " + a.image(g).to_string() + " vs "
                 + b.image(g).to_string();
        }
      }
      return "target ranks differ";
    }

    std::string op(char kind, std::size_t i) {
      return std::string(1, kind) + "_" + std::to_string(i);
    }

  }  // namespace

  std::optional<std::string> check_simplicial_identities(SimplicialGroupModel const& m) {
    std::size_t const N = m.N;
    if (m.ranks.size() != N + 1) {
      return "expected " + std::to_string(N + 1) + " ranks, got " + std::to_string(m.ranks.size());
    }
    if (m.faces.size() != N + 1 || m.degeneracies.size() < N) {
      return "expected face lists for levels 0.." + std::to_string(N)
             + " and degeneracy lists for levels 0.." + std::to_string(N > 0 ? N - 1 : 0);
    }
    for (std::size_t q = 0; q <= N; ++q) {
      std::size_t const nfaces = q == 0 ? 0 : q + 1;
      if (m.faces[q].size() != nfaces) {
        return "level " + std::to_string(q) + " needs " + std::to_string(nfaces) + " faces, got "
               + std::to_string(m.faces[q].size());
      }
      for (std::size_t i = 0; i < nfaces; ++i) {
        auto const& f = m.faces[q][i];
        if (f.source_rank() != m.ranks[q] || f.target_rank() != m.ranks[q - 1]) {
          return op('d', i) + " at level " + std::to_string(q) + " has shape "
                 + std::to_string(f.source_rank()) + " -> " + std::to_string(f.target_rank())
                 + ", expected " + std::to_string(m.ranks[q]) + " -> "
                 + std::to_string(m.ranks[q - 1]);
        }
      }
      if (q < N) {
        if (m.degeneracies[q].size() != q + 1) {
          return "level " + std::to_string(q) + " needs " + std::to_string(q + 1)
                 + " degeneracies, got " + std::to_string(m.degeneracies[q].size());
        }
        for (std::size_t j = 0; j <= q; ++j) {
          auto const& s = m.degeneracies[q][j];
          if (s.source_rank() != m.ranks[q] || s.target_rank() != m.ranks[q + 1]) {
            return op('s', j) + " at level " + std::to_string(q) + " has the wrong shape";
          }
        }
      }
    }

    auto mismatch = [](std::string const& lhs, std::string const& rhs, std::size_t q,
                       GroupHom const& a, GroupHom const& b) -> std::optional<std::string> {
      if (a == b) {
        return std::nullopt;
      }
      return lhs + " = " + rhs + " fails at level " + std::to_string(q) + " on "
             + describe_difference(a, b);
    };

    // d_i d_j = d_{j-1} d_i for i < j, on level q.
    for (std::size_t q = 2; q <= N; ++q) {
      for (std::size_t j = 1; j <= q; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          auto lhs = compose_hom(m.face(q - 1, i), m.face(q, j));
          auto rhs = compose_hom(m.face(q - 1, j - 1), m.face(q, i));
          if (auto e = mismatch(op('d', i) + " " + op('d', j), op('d', j - 1) + " " + op('d', i), q, lhs, rhs)) {
            return e;
          }
        }
      }
    }
    // Mixed identities for s_j on level q followed by d_i on level q + 1.
    for (std::size_t q = 0; q + 1 <= N; ++q) {
      for (std::size_t j = 0; j <= q; ++j) {
        for (std::size_t i = 0; i <= q + 1; ++i) {
          auto     lhs = compose_hom(m.face(q + 1, i), m.degeneracy(q, j));
          GroupHom rhs;
          std::string name;
          if (i < j) {
            rhs  = compose_hom(m.degeneracy(q - 1, j - 1), m.face(q, i));
            name = op('s', j - 1) + " " + op('d', i);
          } else if (i == j || i == j + 1) {
            rhs  = GroupHom::identity(m.ranks[q]);
            name = "id";
          } else {
            rhs  = compose_hom(m.degeneracy(q - 1, j), m.face(q, i - 1));
            name = op('s', j) + " " + op('d', i - 1);
          }
          if (auto e = mismatch(op('d', i) + " " + op('s', j), name, q, lhs, rhs)) {
            return e;
          }
        }
      }
    }
    // s_i s_j = s_{j+1} s_i for i <= j, on level q.
    for (std::size_t q = 0; q + 2 <= N; ++q) {
      for (std::size_t j = 0; j <= q; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          auto lhs = compose_hom(m.degeneracy(q + 1, i), m.degeneracy(q, j));
          auto rhs = compose_hom(m.degeneracy(q + 1, j + 1), m.degeneracy(q, i));
          if (auto e = mismatch(op('s', i) + " " + op('s', j), op('s', j + 1) + " " + op('s', i), q, lhs, rhs)) {
            return e;
          }
        }
      }
    }
    return std::nullopt;
  }

  void validate_model(SimplicialGroupModel const& m) {
    if (auto e = check_simplicial_identities(m)) {
      throw ValidationError("invalid simplicial group model: " + *e);
    }
  }

  std::vector<Surjection> surjections(std::size_t q, std::size_t p) {
    std::vector<Surjection> out;
    if (p > q) {
      return out;
    }
    Surjection cur{0};
    auto       rec = [&](auto&& self) -> void {
      if (cur.size() == q + 1) {
        if (cur.back() == p) {
          out.push_back(cur);
        }
        return;
      }
      std::size_t remaining = q + 1 - cur.size();
      if (p - cur.back() < remaining) {
        cur.push_back(cur.back());
        self(self);
        cur.pop_back();
      }
      if (cur.back() < p) {
        cur.push_back(cur.back() + 1);
        self(self);
        cur.pop_back();
      }
    };
    rec(rec);
    return out;
  }

  CellularModelBuilder::CellularModelBuilder(std::vector<Cell> cells) : _cells(std::move(cells)) {}

  std::vector<CellularModelBuilder::Generator> const& CellularModelBuilder::level(std::size_t q) const {
    while (_levels.size() <= q) {
      std::size_t const      l = _levels.size();
      std::vector<Generator> gens;
      for (std::size_t c = 0; c < _cells.size(); ++c) {
        for (auto& s : surjections(l, _cells[c].dim)) {
          gens.push_back({c, std::move(s)});
        }
      }
      _levels.push_back(std::move(gens));
    }
    return _levels[q];
  }

  std::size_t CellularModelBuilder::rank(std::size_t q) const {
    return level(q).size();
  }

  std::size_t CellularModelBuilder::generator_index(std::size_t cell, Surjection const& sigma) const {
    auto const& gens = level(sigma.size() - 1);
    auto        it   = std::lower_bound(gens.begin(), gens.end(), std::make_pair(cell, &sigma),
                               [](Generator const& g, auto const& key) {
                                 return g.cell < key.first
                                        || (g.cell == key.first && g.sigma < *key.second);
                               });
    if (it == gens.end() || it->cell != cell || it->sigma != sigma) {
      throw ValidationError("no generator for cell " + std::to_string(cell)
                            + " along the given surjection");
    }
    return static_cast<std::size_t>(it - gens.begin());
  }

  FreeWord CellularModelBuilder::face_of(Generator const& g, std::size_t i) const {
    std::size_t const q = g.sigma.size() - 1;
    std::size_t const v = g.sigma[i];
    Surjection        rest(g.sigma);
    rest.erase(rest.begin() + static_cast<long>(i));
    bool const still_onto = (i > 0 && g.sigma[i - 1] == v) || (i < q && g.sigma[i + 1] == v);
    if (still_onto) {
      return FreeWord::generator(generator_index(g.cell, rest));
    }
    // sigma d^i = d^v tau with tau: [q-1] -> [p-1]; pull the face word back
    // along tau.
    Surjection tau(rest);
    for (auto& x : tau) {
      if (x > v) {
        --x;
      }
    }
    auto const&               lower = level(_cells[g.cell].dim - 1);
    std::vector<std::int32_t> letters;
    for (auto a : _cells[g.cell].faces[v].letters()) {
      auto const& h = lower[static_cast<std::size_t>(std::abs(a)) - 1];
      Surjection  composed(tau.size());
      for (std::size_t t = 0; t < tau.size(); ++t) {
        composed[t] = h.sigma[tau[t]];
      }
      auto idx = static_cast<std::int32_t>(generator_index(h.cell, composed) + 1);
      letters.push_back(a > 0 ? idx : -idx);
    }
    return FreeWord(std::move(letters));
  }

  SimplicialGroupModel CellularModelBuilder::build(std::size_t N) const {
    for (std::size_t c = 0; c < _cells.size(); ++c) {
      auto const& cell = _cells[c];
      if (cell.dim == 0) {
        if (!cell.faces.empty()) {
          throw ValidationError("0-cell " + cell.name + " cannot have faces");
        }
        continue;
      }
      if (cell.faces.size() != cell.dim + 1) {
        throw ValidationError("cell " + cell.name + " of dimension " + std::to_string(cell.dim)
                              + " needs " + std::to_string(cell.dim + 1) + " faces");
      }
      for (auto const& w : cell.faces) {
        if (w.max_generator() > rank(cell.dim - 1)) {
          throw ValidationError("face " + w.to_string() + " of cell " + cell.name
                                + " uses a generator beyond level " + std::to_string(cell.dim - 1)
                                + " rank " + std::to_string(rank(cell.dim - 1)));
        }
      }
    }

    SimplicialGroupModel m;
    m.N = N;
    m.faces.resize(N + 1);
    m.degeneracies.resize(N + 1);
    for (std::size_t q = 0; q <= N; ++q) {
      auto const& gens = level(q);
      m.ranks.push_back(gens.size());
      std::vector<std::string> labels;
      for (auto const& g : gens) {
        std::string label = _cells[g.cell].name;
        if (g.sigma.size() != _cells[g.cell].dim + 1) {
          label += "@";
          for (auto x : g.sigma) {
            label += std::to_string(x);
          }
        }
        labels.push_back(label);
      }
      m.generator_labels.push_back(std::move(labels));
    }
    for (std::size_t q = 1; q <= N; ++q) {
      auto const& gens = level(q);
      for (std::size_t i = 0; i <= q; ++i) {
        std::vector<FreeWord> images;
        for (auto const& g : gens) {
          images.push_back(face_of(g, i));
        }
        m.faces[q].emplace_back(gens.size(), m.ranks[q - 1], std::move(images));
      }
    }
    for (std::size_t q = 0; q < N; ++q) {
      auto const& gens = level(q);
      for (std::size_t j = 0; j <= q; ++j) {
        std::vector<FreeWord> images;
        for (auto const& g : gens) {
          Surjection s(g.sigma);
          s.insert(s.begin() + static_cast<long>(j), s[j]);
          images.push_back(FreeWord::generator(generator_index(g.cell, s)));
        }
        m.degeneracies[q].emplace_back(gens.size(), m.ranks[q + 1], std::move(images));
      }
    }
    return m;
  }

  ReducedSimplicialSet ReducedSimplicialSet::sphere(std::size_t n) {
    if (n == 0) {
      throw ValidationError("the 0-sphere is not reduced");
    }
    ReducedSimplicialSet k;
    k.simplices.push_back({"e" + std::to_string(n), n,
                           std::vector<std::optional<FaceRef>>(n + 1, std::nullopt)});
    return k;
  }

  SimplicialGroupModel milnor_model(ReducedSimplicialSet const& k, std::size_t N) {
    std::vector<Cell> cells;
    for (auto const& s : k.simplices) {
      if (s.dim == 0) {
        throw ValidationError("simplicial set is not reduced: extra vertex " + s.name);
      }
      cells.push_back({s.name, s.dim, {}});
    }
    CellularModelBuilder shape(cells);
    for (std::size_t c = 0; c < k.simplices.size(); ++c) {
      auto const& s = k.simplices[c];
      if (s.faces.size() != s.dim + 1) {
        throw ValidationError("simplex " + s.name + " needs " + std::to_string(s.dim + 1) + " faces");
      }
      for (auto const& f : s.faces) {
        if (!f) {
          cells[c].faces.emplace_back();
          continue;
        }
        if (f->simplex >= k.simplices.size() || f->sigma.size() != s.dim
            || f->sigma.front() != 0 || f->sigma.back() != k.simplices[f->simplex].dim) {
          throw ValidationError("malformed face reference in simplex " + s.name);
        }
        for (std::size_t t = 1; t < f->sigma.size(); ++t) {
          if (f->sigma[t] < f->sigma[t - 1] || f->sigma[t] > f->sigma[t - 1] + 1) {
            throw ValidationError("face of simplex " + s.name + " is not along a monotone surjection");
          }
        }
        cells[c].faces.push_back(FreeWord::generator(shape.generator_index(f->simplex, f->sigma)));
      }
    }
    auto m = CellularModelBuilder(std::move(cells)).build(N);
    validate_model(m);
    return m;
  }

  SimplicialGroupModel constant_model(std::size_t k, std::size_t N) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < k; ++i) {
      cells.push_back({"x" + std::to_string(i), 0, {}});
    }
    return CellularModelBuilder(std::move(cells)).build(N);
  }

  SimplicialGroupModel torus_model(std::size_t N) {
    std::vector<Cell> cells{{"x", 0, {}},
                            {"y", 0, {}},
                            {"r", 1, {FreeWord::parse("x0 x1 x0^-1 x1^-1"), FreeWord()}}};
    auto m = CellularModelBuilder(std::move(cells)).build(N);
    validate_model(m);
    return m;
  }

  IntegerChainComplex abelianized_chains(SimplicialGroupModel const& m) {
    IntegerChainComplex c;
    c.ranks = m.ranks;
    c.differentials.resize(m.N + 1);
    for (std::size_t q = 1; q <= m.N; ++q) {
      IntegerMatrix d(m.ranks[q - 1], m.ranks[q]);
      for (std::size_t i = 0; i <= q; ++i) {
        auto a = abelianize_hom(m.face(q, i));
        d      = i % 2 == 0 ? d + a : d - a;
      }
      c.differentials[q] = std::move(d);
    }
    return c;
  }

}  // namespace repchar
