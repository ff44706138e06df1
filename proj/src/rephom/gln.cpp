//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/rephom/gln.hpp"

#include <sstream>

#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    using PolyMatrix = std::vector<Polynomial>;  // row-major n x n

    PolyMatrix multiply(PolyMatrix const& a, PolyMatrix const& b, std::size_t n, std::size_t vars) {
      PolyMatrix c(n * n, Polynomial(vars));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i * n + k].is_zero()) {
            continue;
          }
          for (std::size_t j = 0; j < n; ++j) {
            c[i * n + j] = c[i * n + j] + a[i * n + k] * b[k * n + j];
          }
        }
      }
      return c;
    }

    PolyMatrix identity(std::size_t n, std::size_t vars) {
      PolyMatrix m(n * n, Polynomial(vars));
      for (std::size_t i = 0; i < n; ++i) {
        m[i * n + i] = Polynomial::constant(vars, 1);
      }
      return m;
    }

    // Laplace expansion along the first row.
    Polynomial determinant(PolyMatrix const& m, std::size_t n, std::size_t vars) {
      if (n == 0) {
        return Polynomial::constant(vars, 1);
      }
      if (n == 1) {
        return m[0];
      }
      Polynomial det(vars);
      for (std::size_t c = 0; c < n; ++c) {
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
          for (std::size_t k = 0; k < n; ++k) {
            if (k != c) {
              minor.push_back(m[r * n + k]);
            }
          }
        }
        auto term = m[c] * determinant(minor, n - 1, vars);
        det       = c % 2 == 0 ? det + term : det - term;
      }
      return det;
    }

    PolyMatrix adjugate(PolyMatrix const& m, std::size_t n, std::size_t vars) {
      PolyMatrix adj(n * n, Polynomial(vars));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          PolyMatrix minor;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              if (i != r && j != c) {
                minor.push_back(m[i * n + j]);
              }
            }
          }
          auto cof = determinant(minor, n - 1, vars);
          // adj = transpose of the cofactor matrix
          adj[c * n + r] = (r + c) % 2 == 0 ? cof : Polynomial(vars) - cof;
        }
      }
      return adj;
    }

  }  // namespace

  std::vector<Polynomial> word_matrix(GlnPresentation const& g, FreeWord const& w) {
    if (w.max_generator() > g.generators) {
      throw ValidationError("word uses a generator beyond the rank");
    }
    std::size_t const n    = g.n;
    std::size_t const vars = g.variables.size();
    PolyMatrix        acc  = identity(n, vars);
    for (auto letter : w.letters()) {
      auto const gen = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      PolyMatrix mat;
      for (std::size_t k = 0; k < n * n; ++k) {
        mat.push_back(Polynomial::variable(vars, gen * n * n + k));
      }
      if (letter < 0) {
        auto const d = Polynomial::variable(vars, g.inverse_variable(gen));
        mat          = adjugate(mat, n, vars);
        for (auto& e : mat) {
          e = e * d;
        }
      }
      acc = multiply(acc, mat, n, vars);
    }
    return acc;
  }

  GlnPresentation rep_ring_gln_degree0(GroupPresentation const& p, std::size_t n) {
    if (n == 0 || n > 9) {
      throw ValidationError("matrix size must be between 1 and 9");
    }
    GlnPresentation out;
    out.n          = n;
    out.generators = p.rank;
    for (auto const& r : p.relators) {
      if (r.max_generator() > p.rank) {
        throw ValidationError("relator uses a generator beyond the rank");
      }
    }
    std::size_t const vars = p.rank * n * n + p.rank;
    for (std::size_t g = 0; g < p.rank; ++g) {
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          out.variables.push_back("x" + std::to_string(g) + "_" + std::to_string(r + 1) + std::to_string(c + 1));
        }
      }
    }
    for (std::size_t g = 0; g < p.rank; ++g) {
      out.variables.push_back("d" + std::to_string(g));
    }

    for (std::size_t g = 0; g < p.rank; ++g) {
      PolyMatrix mat;
      for (std::size_t k = 0; k < n * n; ++k) {
        mat.push_back(Polynomial::variable(vars, g * n * n + k));
      }
      auto const d = Polynomial::variable(vars, out.inverse_variable(g));
      out.localization.push_back(determinant(mat, n, vars) * d - Polynomial::constant(vars, 1));
    }

    auto const id = identity(n, vars);
    for (auto const& r : p.relators) {
      auto const w = word_matrix(out, r);
      for (std::size_t k = 0; k < n * n; ++k) {
        out.ideal.push_back(w[k] - id[k]);
      }
    }
    return out;
  }

  std::string GlnPresentation::to_string() const {
    std::ostringstream s;
    s << "variables:";
    for (auto const& v : variables) {
      s << " " << v;
    }
    s << "\nlocalization:\n";
    for (auto const& p : localization) {
      s << "  " << p.to_string(variables) << "\n";
    }
    s << "ideal:\n";
    for (auto const& p : ideal) {
      s << "  " << p.to_string(variables) << "\n";
    }
    return s.str();
  }

}  // namespace repchar
