//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/cychom/cyclic_homology.hpp"

#include <limits>

#include "repchar/errors.hpp"
#include "repchar/groupkit/cyclic_bar.hpp"
#include "repchar/parallel.hpp"

namespace repchar {

  namespace {

    constexpr std::size_t absent = std::numeric_limits<std::size_t>::max();

    void add_block(SparseMatrix::Builder& b, SparseMatrix const& m, std::size_t row0, std::size_t col0,
                   std::int64_t sign) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        for (auto const& e : m.column(c)) {
          b.add(row0 + e.row, col0 + c, sign == 1 ? e.value : -e.value);
        }
      }
    }

    bool is_zero_product(SparseMatrix const& a, SparseMatrix const& b) {
      return (a * b).is_zero();
    }

  }  // namespace

  CyclicModule build_cyclic_module(FiniteGroup const& g, std::size_t top, CyclicModuleOptions const& opts) {
    CyclicBar const bar(g);
    auto const      cls = conjugacy_class_index(g);
    if (opts.conjugacy_class && *opts.conjugacy_class >= conjugacy_classes(g).size()) {
      throw ValidationError("conjugacy class index out of range");
    }

    CyclicModule m;
    m.top = top;
    m.basis.resize(top + 1);
    std::vector<std::vector<std::size_t>> local(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
      std::size_t const size = bar.level_size(q);
      local[q].assign(size, absent);
      for (std::size_t code = 0; code < size; ++code) {
        auto const t = bar.decode(code, q);
        if (opts.conjugacy_class && cls[bar.product(t)] != *opts.conjugacy_class) {
          continue;
        }
        if (opts.reduced) {
          bool constant = true;
          for (auto x : t) {
            constant = constant && x == g.identity();
          }
          if (constant) {
            continue;
          }
        }
        local[q][code] = m.basis[q].size();
        m.basis[q].push_back(code);
      }
    }

    for (std::size_t q = 0; q <= top; ++q) {
      std::size_t const     n = m.dim(q);
      std::size_t const     below = q == 0 ? 0 : m.dim(q - 1);
      SparseMatrix::Builder b(below, n), bp(below, n), omt(n, n), norm(n, n);
      std::int64_t const    sign = q % 2 == 0 ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) {
        auto const t = bar.decode(m.basis[q][k], q);
        if (q >= 1) {
          for (std::size_t i = 0; i <= q; ++i) {
            auto const row = local[q - 1][bar.encode(bar.face(t, i))];
            if (row == absent) {
              continue;
            }
            std::int64_t const s = i % 2 == 0 ? 1 : -1;
            b.add(row, k, s);
            if (i < q) {
              bp.add(row, k, s);
            }
          }
        }
        omt.add(k, k, 1);
        omt.add(local[q][bar.encode(bar.cyclic(t))], k, -sign);
        auto         rotated = t;
        std::int64_t power   = 1;
        for (std::size_t j = 0; j <= q; ++j) {
          norm.add(local[q][bar.encode(rotated)], k, power);
          rotated = bar.cyclic(rotated);
          power *= sign;
        }
      }
      m.b.push_back(std::move(b).build());
      m.b_prime.push_back(std::move(bp).build());
      m.one_minus_t.push_back(std::move(omt).build());
      m.norm.push_back(std::move(norm).build());
    }
    return m;
  }

  std::optional<std::string> CyclicModule::check_identities() const {
    for (std::size_t q = 0; q <= top; ++q) {
      auto const at = " at level " + std::to_string(q);
      if (q >= 2 && !is_zero_product(b[q - 1], b[q])) {
        return "b^2 != 0" + at;
      }
      if (q >= 2 && !is_zero_product(b_prime[q - 1], b_prime[q])) {
        return "b'^2 != 0" + at;
      }
      if (!is_zero_product(one_minus_t[q], norm[q])) {
        return "(1-t)N != 0" + at;
      }
      if (!is_zero_product(norm[q], one_minus_t[q])) {
        return "N(1-t) != 0" + at;
      }
      if (q >= 1 && b[q] * one_minus_t[q] != one_minus_t[q - 1] * b_prime[q]) {
        return "b(1-t) != (1-t)b'" + at;
      }
      if (q >= 1 && b_prime[q] * norm[q] != norm[q - 1] * b[q]) {
        return "b'N != Nb" + at;
      }
    }
    return std::nullopt;
  }

  ChainComplex cyclic_total_complex(CyclicModule const& m, std::size_t top) {
    if (m.top < top) {
      throw ValidationError("cyclic module is too short for the requested total degree");
    }
    std::vector<std::vector<std::size_t>> offset(top + 1);
    std::vector<std::size_t>              dims(top + 1, 0);
    for (std::size_t n = 0; n <= top; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        offset[n].push_back(dims[n]);
        dims[n] += m.dim(n - p);
      }
    }
    ChainComplex tot(dims);
    for (std::size_t n = 1; n <= top; ++n) {
      SparseMatrix::Builder d(dims[n - 1], dims[n]);
      for (std::size_t p = 0; p <= n; ++p) {
        std::size_t const q = n - p;
        if (q >= 1) {
          if (p % 2 == 0) {
            add_block(d, m.b[q], offset[n - 1][p], offset[n][p], 1);
          } else {
            add_block(d, m.b_prime[q], offset[n - 1][p], offset[n][p], -1);
          }
        }
        if (p >= 1) {
          auto const& h = p % 2 == 1 ? m.one_minus_t[q] : m.norm[q];
          add_block(d, h, offset[n - 1][p - 1], offset[n][p], 1);
        }
      }
      tot.set_differential(n, std::move(d).build());
    }
    return tot;
  }

  namespace {

    GradedDims split_hc(FiniteGroup const& g, std::size_t bound, bool reduced) {
      std::size_t const                    classes = conjugacy_classes(g).size();
      std::vector<std::vector<std::size_t>> per_class(classes);
      parallel_for(0, classes, [&](std::size_t c) {
        auto const m   = build_cyclic_module(g, bound + 1, {c, reduced});
        auto       dims = homology_dims(cyclic_total_complex(m, bound + 1));
        dims.resize(bound + 1);
        per_class[c] = std::move(dims);
      });
      GradedDims total(bound + 1, 0);
      for (auto const& dims : per_class) {
        for (std::size_t q = 0; q <= bound; ++q) {
          total[q] += dims[q];
        }
      }
      return total;
    }

  }  // namespace

  GradedDims hc_dims(FiniteGroup const& g, std::size_t bound) {
    return split_hc(g, bound, false);
  }

  GradedDims reduced_hc_dims(FiniteGroup const& g, std::size_t bound) {
    return split_hc(g, bound, true);
  }

  Hc0Basis hc0_basis(FiniteGroup const& g) {
    Hc0Basis out;
    for (auto const& cls : conjugacy_classes(g)) {
      out.representatives.push_back(cls.front());
    }
    out.class_of = conjugacy_class_index(g);
    return out;
  }

}  // namespace repchar
