//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/rephom/representation_homology.hpp"

#include <algorithm>
#include <sstream>

#include "repchar/errors.hpp"
#include "repchar/parallel.hpp"

namespace repchar {

  namespace {

    using Vec = std::vector<std::int64_t>;

    // Small dense integer matrix for exponent maps.
    struct LatticeMap {
      std::size_t               rows = 0, cols = 0;
      std::vector<std::int64_t> a;

      explicit LatticeMap(IntegerMatrix const& m) : rows(m.rows()), cols(m.cols()), a(rows * cols) {
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < cols; ++c) {
            a[r * cols + c] = static_cast<std::int64_t>(m(r, c));
          }
        }
      }

      Vec apply(Vec const& v) const {
        Vec out(rows, 0);
        for (std::size_t r = 0; r < rows; ++r) {
          for (std::size_t c = 0; c < cols; ++c) {
            out[r] += a[r * cols + c] * v[c];
          }
        }
        return out;
      }
    };

    // Index of v in the box [-b, b]^n, or npos when outside.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t box_code(Vec const& v, std::int64_t b) {
      std::size_t code = 0;
      for (std::size_t j = v.size(); j-- > 0;) {
        if (v[j] < -b || v[j] > b) {
          return npos;
        }
        code = code * static_cast<std::size_t>(2 * b + 1) + static_cast<std::size_t>(v[j] + b);
      }
      return code;
    }

    Vec box_decode(std::size_t code, std::size_t n, std::int64_t b) {
      Vec v(n);
      for (std::size_t j = 0; j < n; ++j) {
        v[j] = static_cast<std::int64_t>(code % static_cast<std::size_t>(2 * b + 1)) - b;
        code /= static_cast<std::size_t>(2 * b + 1);
      }
      return v;
    }

    std::size_t box_size(std::size_t n, std::int64_t b) {
      std::size_t s = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (s > (std::size_t{1} << 26) / static_cast<std::size_t>(2 * b + 1)) {
          throw ValidationError("monomial window too large; lower the window bound or degree");
        }
        s *= static_cast<std::size_t>(2 * b + 1);
      }
      return s;
    }

    void check_bound(SimplicialGroupModel const& m, std::size_t bound) {
      validate_model(m);
      if (bound + 2 > m.N) {
        throw ValidationError("degree bound " + std::to_string(bound) + " needs a model truncated at level >= "
                              + std::to_string(bound + 2) + ", got " + std::to_string(m.N));
      }
    }

  }  // namespace

  HrDegree0 hr_degree0(GroupPresentation const& p) {
    HrDegree0 out;
    out.group = p.abelianization();
    std::ostringstream s;
    s << "k[" << out.group.to_string() << "]";
    if (out.group.torsion.empty()) {
      s << ": Laurent polynomials in " << out.group.free_rank << " variable"
        << (out.group.free_rank == 1 ? "" : "s");
    } else {
      s << ": basis t^w for w in " << out.group.to_string();
    }
    out.description = s.str();
    return out;
  }

  GradedDims assemble_free_graded_commutative(std::vector<std::size_t> const& ranks, std::size_t bound) {
    GradedDims series(bound + 1, 0);
    series[0] = 1;
    for (std::size_t q = 1; q < ranks.size() && q <= bound; ++q) {
      for (std::size_t g = 0; g < ranks[q]; ++g) {
        if (q % 2 == 1) {
          // times (1 + t^q)
          for (std::size_t d = bound + 1; d-- > q;) {
            series[d] += series[d - q];
          }
        } else {
          // times 1 / (1 - t^q)
          for (std::size_t d = q; d <= bound; ++d) {
            series[d] += series[d - q];
          }
        }
      }
    }
    return series;
  }

  HRAnswer hr_derived_abelianization(SimplicialGroupModel const& m, std::size_t bound) {
    check_bound(m, bound);
    auto const groups = homology_of_integer_complex(abelianized_chains(m));
    HRAnswer   out;
    out.h1 = groups.at(0);
    out.homotopy_ranks.assign(bound + 1, 0);
    for (std::size_t q = 1; q <= bound; ++q) {
      out.homotopy_ranks[q] = groups.at(q).free_rank;
    }
    out.per_weight = assemble_free_graded_commutative(out.homotopy_ranks, bound);
    return out;
  }

  MonomialComplex monomial_complex(SimplicialGroupModel const& m, std::size_t top, std::size_t window) {
    validate_model(m);
    if (top > m.N || m.N == 0) {
      throw ValidationError("monomial complex needs model levels up to " + std::to_string(top));
    }
    if (window == 0) {
      throw ValidationError("window bound must be at least 1");
    }
    auto const b = static_cast<std::int64_t>(window);

    std::vector<std::vector<LatticeMap>> faces(top + 1), degens(top + 1);
    for (std::size_t q = 1; q <= top; ++q) {
      for (std::size_t i = 0; i <= q; ++i) {
        faces[q].emplace_back(abelianize_hom(m.face(q, i)));
      }
      for (std::size_t j = 0; j < q; ++j) {
        degens[q].emplace_back(abelianize_hom(m.degeneracy(q - 1, j)));
      }
    }
    IntegerMatrix boundary = abelianize_hom(m.face(1, 0)) - abelianize_hom(m.face(1, 1));
    Cokernel const pi0(boundary);

    MonomialComplex mc;
    mc.window = window;
    mc.basis.resize(top + 1);
    mc.weight_of.resize(top + 1);

    // Per level and box code: -1 outside the window, otherwise the weight
    // index, and separately the nondegenerate index.
    std::vector<std::vector<std::int64_t>> weight_at(top + 1), nondeg_at(top + 1);

    // Level 0: every vector is in the window and nondegenerate.
    std::size_t const      n0 = box_size(m.ranks[0], b);
    std::vector<Weight>    raw(n0);
    for (std::size_t code = 0; code < n0; ++code) {
      auto const        v = box_decode(code, m.ranks[0], b);
      std::vector<BigInt> big(v.begin(), v.end());
      raw[code] = pi0.reduce(big);
    }
    mc.weights = raw;
    std::sort(mc.weights.begin(), mc.weights.end());
    mc.weights.erase(std::unique(mc.weights.begin(), mc.weights.end()), mc.weights.end());
    weight_at[0].resize(n0);
    nondeg_at[0].resize(n0);
    for (std::size_t code = 0; code < n0; ++code) {
      auto w = static_cast<std::size_t>(std::lower_bound(mc.weights.begin(), mc.weights.end(), raw[code])
                                        - mc.weights.begin());
      weight_at[0][code] = static_cast<std::int64_t>(w);
      nondeg_at[0][code] = static_cast<std::int64_t>(mc.basis[0].size());
      mc.basis[0].push_back(box_decode(code, m.ranks[0], b));
      mc.weight_of[0].push_back(w);
    }

    for (std::size_t q = 1; q <= top; ++q) {
      std::size_t const n = box_size(m.ranks[q], b);
      weight_at[q].assign(n, -1);
      nondeg_at[q].assign(n, -1);
      for (std::size_t code = 0; code < n; ++code) {
        auto const   v = box_decode(code, m.ranks[q], b);
        std::int64_t w = -1;
        bool         inside = true;
        for (std::size_t i = 0; i <= q && inside; ++i) {
          auto const fc = box_code(faces[q][i].apply(v), b);
          inside        = fc != npos && weight_at[q - 1][fc] >= 0;
          if (inside && i == 0) {
            w = weight_at[q - 1][fc];
          }
        }
        if (!inside) {
          continue;
        }
        weight_at[q][code] = w;
        bool degenerate    = false;
        for (std::size_t j = 0; j < q && !degenerate; ++j) {
          degenerate = degens[q][j].apply(faces[q][j].apply(v)) == v;
        }
        if (!degenerate) {
          nondeg_at[q][code] = static_cast<std::int64_t>(mc.basis[q].size());
          mc.basis[q].push_back(v);
          mc.weight_of[q].push_back(static_cast<std::size_t>(w));
        }
      }
    }

    std::vector<std::size_t> dims;
    for (auto const& level : mc.basis) {
      dims.push_back(level.size());
    }
    mc.complex = ChainComplex(dims);
    for (std::size_t q = 1; q <= top; ++q) {
      SparseMatrix::Builder d(dims[q - 1], dims[q]);
      for (std::size_t k = 0; k < dims[q]; ++k) {
        for (std::size_t i = 0; i <= q; ++i) {
          auto const row = nondeg_at[q - 1][box_code(faces[q][i].apply(mc.basis[q][k]), b)];
          if (row >= 0) {
            d.add(static_cast<std::size_t>(row), k, i % 2 == 0 ? 1 : -1);
          }
        }
      }
      mc.complex.set_differential(q, std::move(d).build());
    }
    return mc;
  }

  WindowHomology window_homology(SimplicialGroupModel const& m, std::size_t bound, std::size_t window) {
    check_bound(m, bound);
    auto const        mc  = monomial_complex(m, bound + 1, window);
    std::size_t const top = bound + 1;

    std::vector<GradedDims> per(mc.weights.size());
    parallel_for(0, mc.weights.size(), [&](std::size_t w) {
      std::vector<std::vector<std::size_t>> local(top + 1);
      std::vector<std::size_t>              dims(top + 1, 0);
      for (std::size_t q = 0; q <= top; ++q) {
        local[q].assign(mc.basis[q].size(), npos);
        for (std::size_t k = 0; k < mc.basis[q].size(); ++k) {
          if (mc.weight_of[q][k] == w) {
            local[q][k] = dims[q]++;
          }
        }
      }
      ChainComplex sub(dims);
      for (std::size_t q = 1; q <= top; ++q) {
        auto const            d = mc.complex.differential(q);
        SparseMatrix::Builder bd(dims[q - 1], dims[q]);
        for (std::size_t k = 0; k < d.cols(); ++k) {
          if (local[q][k] == npos) {
            continue;
          }
          for (auto const& e : d.column(k)) {
            bd.add(local[q - 1][e.row], local[q][k], e.value);
          }
        }
        sub.set_differential(q, std::move(bd).build());
      }
      auto h = homology_dims(sub);
      h.resize(bound + 1);
      per[w] = std::move(h);
    });

    WindowHomology out;
    out.total.assign(bound + 1, 0);
    for (std::size_t w = 0; w < mc.weights.size(); ++w) {
      out.by_weight[mc.weights[w]] = per[w];
      for (std::size_t q = 0; q <= bound; ++q) {
        out.total[q] += per[w][q];
      }
    }
    return out;
  }

  HrWindowResult hr_bruteforce_window(SimplicialGroupModel const& m, std::size_t bound, std::size_t window) {
    HrWindowResult r;
    r.window         = window;
    r.at_window      = window_homology(m, bound, window);
    r.at_next_window = window_homology(m, bound, window + 1);
    std::vector<bool> degree_ok(bound + 1, true);
    for (auto const& [w, dims] : r.at_window.by_weight) {
      auto const it     = r.at_next_window.by_weight.find(w);
      bool       stable = true;
      for (std::size_t q = 0; q <= bound; ++q) {
        if (it == r.at_next_window.by_weight.end() || it->second[q] != dims[q]) {
          r.unstable.emplace_back(w, q);
          degree_ok[q] = false;
          stable       = false;
        }
      }
      if (stable) {
        r.stable[w] = dims;
      }
    }
    for (std::size_t q = 0; q <= bound; ++q) {
      if (degree_ok[q]) {
        r.trusted_degrees.push_back(q);
      }
    }
    return r;
  }

  bool hr_routes_agree(HRAnswer const& derived, HrWindowResult const& window) {
    std::size_t const coords = derived.h1.torsion.size() + derived.h1.free_rank;
    std::map<Weight, std::vector<bool>> flagged;
    for (auto const& [w, q] : window.unstable) {
      flagged[w].resize(derived.per_weight.size(), false);
      flagged[w][q] = true;
    }
    for (auto const& [w, dims] : window.at_window.by_weight) {
      if (w.size() != coords) {
        return false;
      }
      for (std::size_t q = 0; q < dims.size() && q < derived.per_weight.size(); ++q) {
        auto const f = flagged.find(w);
        if (f != flagged.end() && f->second[q]) {
          continue;
        }
        if (dims[q] != derived.per_weight[q]) {
          return false;
        }
      }
    }
    return true;
  }

  std::string weight_to_string(Weight const& w) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      s << (i ? "," : "") << w[i];
    }
    s << ")";
    return s.str();
  }

}  // namespace repchar
