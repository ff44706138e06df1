//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/charmap/character.hpp"

#include <numeric>
#include <sstream>

#include "repchar/crossedcat/cyclic.hpp"
#include "repchar/crossedcat/delta_s.hpp"
#include "repchar/errors.hpp"
#include "repchar/rephom/gln.hpp"

namespace repchar {

  std::string laurent_to_string(LaurentMonomial const& e) {
    std::ostringstream s;
    bool               first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      s << (first ? "" : "*") << "t" << i;
      if (e[i] != 1) {
        s << "^" << e[i];
      }
      first = false;
    }
    return first ? "1" : s.str();
  }

  LaurentMonomial delta_trace(std::size_t m) {
    return LaurentMonomial(m + 1, 1);
  }

  LaurentMonomial apply_cocyclic(CyclicGenerator const& gen, LaurentMonomial const& e) {
    auto const a = abelianize_hom(psi_cyc(gen));
    if (e.size() != a.cols()) {
      throw ValidationError("monomial level does not match the generator source");
    }
    LaurentMonomial out(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        out[r] += static_cast<std::int64_t>(a(r, c)) * e[c];
      }
    }
    return out;
  }

  std::optional<CyclicGenerator> first_naturality_failure(std::function<LaurentMonomial(std::size_t)> const& element,
                                                          std::size_t max_m) {
    std::vector<CyclicGenerator> gens;
    for (std::size_t n = 0; n <= max_m; ++n) {
      for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
        gens.push_back(CyclicGenerator::face(n, i));
      }
      for (std::size_t j = 0; n + 1 <= max_m && j <= n; ++j) {
        gens.push_back(CyclicGenerator::degeneracy(n, j));
      }
      gens.push_back(CyclicGenerator::cyclic(n));
    }
    for (auto const& gen : gens) {
      if (apply_cocyclic(gen, element(gen.source())) != element(gen.target())) {
        return gen;
      }
    }
    return std::nullopt;
  }

  bool check_cocyclic_naturality(std::size_t max_m) {
    if (max_m < 1) {
      throw ValidationError("naturality check needs max_m >= 1");
    }
    return !first_naturality_failure(delta_trace, max_m).has_value();
  }

  Weight char0_gm(GroupPresentation const& p, FreeWord const& g) {
    if (g.max_generator() > p.rank) {
      throw ValidationError("word uses a generator beyond the rank");
    }
    return Cokernel(p.relator_matrix()).reduce(g.exponent_sums(p.rank));
  }

  std::size_t char0_gm(FiniteGroup const& group, FiniteGroup::element g) {
    if (g >= group.order()) {
      throw ValidationError("element index out of range");
    }
    return abelianization(group).class_of[g];
  }

  GlnCharacter char0_gln(GroupPresentation const& p, FreeWord const& g, std::size_t n) {
    auto const ring = rep_ring_gln_degree0(p, n);
    auto const w    = word_matrix(ring, g);
    Polynomial tr(ring.variables.size());
    for (std::size_t i = 0; i < n; ++i) {
      tr = tr + w[i * n + i];
    }
    return {ring.variables, std::move(tr)};
  }

  namespace {

    SparseMatrix scalar(std::size_t rows, std::size_t cols, std::int64_t c) {
      SparseMatrix::Builder b(rows, cols);
      for (std::size_t i = 0; c != 0 && i < cols; ++i) {
        b.add(i, i, c);
      }
      return std::move(b).build();
    }

    // The constant cyclic module on a basis of size a: every face and the
    // rotation act as the identity.
    CyclicModule constant_cyclic_module(std::size_t a, std::size_t top) {
      CyclicModule m;
      m.top = top;
      for (std::size_t q = 0; q <= top; ++q) {
        std::vector<std::size_t> basis(a);
        std::iota(basis.begin(), basis.end(), 0);
        m.basis.push_back(std::move(basis));
        bool const even = q % 2 == 0;
        m.b.push_back(q == 0 ? scalar(0, a, 0) : scalar(a, a, even ? 1 : 0));
        m.b_prime.push_back(q == 0 ? scalar(0, a, 0) : scalar(a, a, even ? 0 : 1));
        m.one_minus_t.push_back(scalar(a, a, even ? 0 : 2));
        m.norm.push_back(scalar(a, a, even ? static_cast<std::int64_t>(q + 1) : 0));
      }
      return m;
    }

  }  // namespace

  CharacterChainMap char_chain_map_gm(FiniteGroup const& g, std::size_t top) {
    if (top < 1) {
      throw ValidationError("the character chain map needs top >= 1");
    }
    CharacterChainMap out;
    out.abelian = abelianization(g);
    out.classes = hc0_basis(g);
    std::size_t const a = out.abelian.order;

    auto const src = build_cyclic_module(g, top);
    auto const tgt = constant_cyclic_module(a, top);
    out.source     = cyclic_total_complex(src, top);
    out.target     = cyclic_total_complex(tgt, top);

    CyclicBar const bar(g);
    for (std::size_t n = 0; n <= top; ++n) {
      SparseMatrix::Builder f(out.target.dim(n), out.source.dim(n));
      std::size_t           row_offset = 0, col_offset = 0;
      for (std::size_t p = 0; p <= n; ++p) {
        std::size_t const q = n - p;
        for (std::size_t k = 0; k < src.dim(q); ++k) {
          auto const t = bar.decode(src.basis[q][k], q);
          f.add(row_offset + out.abelian.class_of[bar.product(t)], col_offset + k, 1);
        }
        row_offset += a;
        col_offset += src.dim(q);
      }
      out.map.components.push_back(std::move(f).build());
    }
    out.commutes = is_chain_map(out.source, out.target, out.map);
    if (!out.commutes) {
      throw InvariantViolation("character map does not commute with the differentials");
    }

    // Route 1: induced map in homology bases, converted to the class basis
    // on the source and to the standard basis of Q[G_ab] on the target.
    // Only degrees 0 and 1 enter H_0, and the dense homology routines are
    // costly in higher degrees, so this runs on the truncation.
    auto const     low_source = cyclic_total_complex(src, 1);
    auto const     low_target = cyclic_total_complex(tgt, 1);
    ChainMap const low_map{{out.map.components[0], out.map.components[1]}};
    auto const     h0_map = induced_map_on_homology(low_source, low_target, low_map).at(0);
    auto const     sb     = homology_basis(low_source, 0);
    auto const     tb     = homology_basis(low_target, 0);
    std::size_t const classes = out.classes.representatives.size();
    out.h0                    = RationalMatrix(a, classes);
    out.h0_direct             = RationalMatrix(a, classes);
    for (std::size_t c = 0; c < classes; ++c) {
      auto const rep = out.classes.representatives[c];
      std::vector<Rational> z(out.source.dim(0));
      for (std::size_t k = 0; k < src.dim(0); ++k) {
        if (bar.decode(src.basis[0][k], 0)[0] == rep) {
          z[k] = Rational(1);
        }
      }
      auto const coords = sb.coordinates(z);
      for (std::size_t r = 0; r < a; ++r) {
        Rational v;
        for (std::size_t j = 0; j < h0_map.rows(); ++j) {
          Rational img;
          for (std::size_t i = 0; i < coords.size(); ++i) {
            img += h0_map(j, i) * coords[i];
          }
          v += tb.representatives(r, j) * img;
        }
        out.h0(r, c) = v;
      }
      // Route 2: the degree-0 character of the representative.
      out.h0_direct(char0_gm(g, rep), c) = Rational(1);
    }
    return out;
  }

  Hs0 hs0(FiniteGroup const& g, std::size_t max_level) {
    std::size_t const        order = g.order();
    CyclicBar const          bar(g);
    std::vector<std::size_t> offset{0};
    for (std::size_t n = 0; n <= max_level; ++n) {
      offset.push_back(offset.back() + bar.level_size(n));
    }
    std::vector<std::size_t> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };

    for (std::size_t src = 0; src <= max_level; ++src) {
      for (std::size_t tgt = 0; tgt <= max_level; ++tgt) {
        auto const morphisms = all_morphisms(src, tgt);
        for (std::size_t code = 0; code < bar.level_size(src); ++code) {
          auto const x = bar.decode(code, src);
          for (auto const& f : morphisms) {
            CyclicBar::Tuple y;
            for (auto const& mono : f.monomials()) {
              FiniteGroup::element e = g.identity();
              for (auto v : mono) {
                e = g.mul(e, x[v]);
              }
              y.push_back(e);
            }
            auto const u = find(offset[src] + code);
            auto const w = find(offset[tgt] + bar.encode(y));
            if (u != w) {
              parent[std::max(u, w)] = std::min(u, w);
            }
          }
        }
      }
    }

    Hs0                      out;
    std::vector<std::size_t> index_of(parent.size(), parent.size());
    for (std::size_t x = 0; x < order; ++x) {
      auto const r = find(bar.encode({x}));
      if (index_of[r] == parent.size()) {
        index_of[r] = out.representatives.size();
        out.representatives.push_back(x);
      }
      out.class_of.push_back(index_of[r]);
    }
    for (std::size_t x = 0; x < parent.size(); ++x) {
      if (index_of[find(x)] == parent.size()) {
        throw InvariantViolation("a component of the coequalizer has no level-0 tuple");
      }
    }
    out.dimension = out.representatives.size();
    return out;
  }

  TriangleResult check_triangle_degree0(FiniteGroup const& g) {
    TriangleResult out;
    auto const     hs = hs0(g);
    auto const     cm = char_chain_map_gm(g, 1);
    std::size_t const classes = cm.classes.representatives.size();
    std::size_t const a       = cm.abelian.order;

    out.iota_star = RationalMatrix(hs.dimension, classes);
    for (std::size_t c = 0; c < classes; ++c) {
      out.iota_star(hs.class_of[cm.classes.representatives[c]], c) = Rational(1);
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto const c = cm.classes.class_of[x];
      if (hs.class_of[x] != hs.class_of[cm.classes.representatives[c]]) {
        out.reason = "conjugate elements land in different HS_0 classes";
        return out;
      }
    }

    // A component goes to the G_ab class of its level-0 tuples; every
    // tuple is identified with its product, so these cover the component.
    out.psi_star = RationalMatrix(a, hs.dimension);
    for (std::size_t h = 0; h < hs.dimension; ++h) {
      out.psi_star(cm.abelian.class_of[hs.representatives[h]], h) = Rational(1);
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (cm.abelian.class_of[x] != cm.abelian.class_of[hs.representatives[hs.class_of[x]]]) {
        out.reason = "an HS_0 class meets two abelianization classes";
        return out;
      }
    }

    out.character      = cm.h0;
    out.character_rank = cm.h0.rank();
    if (!(cm.h0 == cm.h0_direct)) {
      out.reason = "H_0 of the chain map differs from the degree-0 character";
      return out;
    }
    if (!(out.psi_star * out.iota_star == out.character)) {
      out.reason = "the composite through HS_0 differs from the character";
      return out;
    }
    out.holds = true;
    return out;
  }

}  // namespace repchar
