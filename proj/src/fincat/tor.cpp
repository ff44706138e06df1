//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/fincat/tor.hpp"

#include <map>
#include <optional>

#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    std::vector<std::size_t> chain_key(NerveChain const& ch) {
      return ch.morphisms.empty() ? std::vector<std::size_t>{ch.start} : ch.morphisms;
    }

    struct ChainIndex {
      std::vector<std::vector<NerveChain>>                          levels;
      std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup;

      ChainIndex(FinCategory const& c, std::size_t max_length) : levels(nerve_chains(c, max_length)) {
        lookup.resize(levels.size());
        for (std::size_t p = 0; p < levels.size(); ++p) {
          for (std::size_t i = 0; i < levels[p].size(); ++i) {
            lookup[p][chain_key(levels[p][i])] = i;
          }
        }
      }

      std::size_t find(NerveChain const& ch) const {
        return lookup.at(ch.morphisms.size()).at(chain_key(ch));
      }
    };

    // The i-th face of a chain, or nothing when it is degenerate.
    std::optional<NerveChain> face(FinCategory const& c, NerveChain const& ch, std::size_t i) {
      std::size_t const p = ch.morphisms.size();
      NerveChain        out;
      if (i == 0) {
        out.start = c.target(ch.morphisms.front());
        out.end   = ch.end;
        out.morphisms.assign(ch.morphisms.begin() + 1, ch.morphisms.end());
        return out;
      }
      if (i == p) {
        out.start = ch.start;
        out.end   = c.source(ch.morphisms.back());
        out.morphisms.assign(ch.morphisms.begin(), ch.morphisms.end() - 1);
        return out;
      }
      std::size_t composite = c.compose(ch.morphisms[i], ch.morphisms[i - 1]);
      if (c.is_identity(composite)) {
        return std::nullopt;
      }
      out.start = ch.start;
      out.end   = ch.end;
      for (std::size_t k = 0; k < p; ++k) {
        if (k == i - 1) {
          out.morphisms.push_back(composite);
        } else if (k != i) {
          out.morphisms.push_back(ch.morphisms[k]);
        }
      }
      return out;
    }

    // Offsets of each chain's coefficient block N(c_p) (x) M(c_0); the last
    // entry is the total dimension.
    std::vector<std::size_t> level_offsets(std::vector<NerveChain> const& chains, ModuleFunctor const& n,
                                           ModuleFunctor const& m) {
      std::vector<std::size_t> off{0};
      for (auto const& ch : chains) {
        off.push_back(off.back() + n.dims[ch.end] * m.dims[ch.start]);
      }
      return off;
    }

    // Adds sign * d_p of B(N, C, M) into b at the given block position.
    void add_bar_differential(FinCategory const& c, ChainIndex const& idx, ModuleFunctor const& n,
                              ModuleFunctor const& m, std::size_t p, SparseMatrix::Builder& b,
                              std::size_t row_shift, std::size_t col_shift, std::int64_t sign) {
      auto const src_off = level_offsets(idx.levels[p], n, m);
      auto const tgt_off = level_offsets(idx.levels[p - 1], n, m);
      for (std::size_t k = 0; k < idx.levels[p].size(); ++k) {
        auto const&       ch  = idx.levels[p][k];
        std::size_t const dm0 = m.dims[ch.start];
        std::size_t const dnp = n.dims[ch.end];
        for (std::size_t i = 0; i <= p; ++i) {
          auto fc = face(c, ch, i);
          if (!fc) {
            continue;
          }
          std::size_t const  row0 = tgt_off[idx.find(*fc)];
          std::int64_t const s    = (i % 2 == 0 ? 1 : -1) * sign;
          for (std::size_t a = 0; a < dnp; ++a) {
            for (std::size_t x = 0; x < dm0; ++x) {
              std::size_t const col = col_shift + src_off[k] + a * dm0 + x;
              if (i == 0) {
                // Push the M-coefficient along f_1.
                std::size_t const dm1 = m.dims[fc->start];
                for (auto const& e : m.maps[ch.morphisms.front()].column(x)) {
                  b.add(row_shift + row0 + a * dm1 + e.row, col, e.value * Rational(s));
                }
              } else if (i == p) {
                // Pull the N-coefficient back along f_p.
                for (auto const& e : n.maps[ch.morphisms.back()].column(a)) {
                  b.add(row_shift + row0 + e.row * dm0 + x, col, e.value * Rational(s));
                }
              } else {
                b.add(row_shift + row0 + a * dm0 + x, col, s);
              }
            }
          }
        }
      }
    }

    void validate_pair(FinCategory const& c, ModuleFunctor const& n, ModuleFunctor const& m) {
      if (n.variance != Variance::contravariant || m.variance != Variance::covariant) {
        throw ValidationError("Tor needs a contravariant left and a covariant right functor");
      }
      if (auto err = check_module_functor(c, n)) {
        throw ValidationError("left coefficient functor: " + *err);
      }
      if (auto err = check_module_functor(c, m)) {
        throw ValidationError("right coefficient functor: " + *err);
      }
    }

    ChainComplex build_bar(FinCategory const& c, ChainIndex const& idx, ModuleFunctor const& n,
                           ModuleFunctor const& m) {
      std::vector<std::size_t> dims;
      for (auto const& level : idx.levels) {
        dims.push_back(level_offsets(level, n, m).back());
      }
      ChainComplex cx(dims);
      for (std::size_t p = 1; p < dims.size(); ++p) {
        SparseMatrix::Builder b(dims[p - 1], dims[p]);
        add_bar_differential(c, idx, n, m, p, b, 0, 0, 1);
        cx.set_differential(p, std::move(b).build());
      }
      return cx;
    }

    std::vector<std::size_t> truncated_homology(ChainComplex const& cx, std::size_t bound) {
      auto dims = homology_dims(cx);
      dims.resize(bound + 1);
      return dims;
    }

    // Incremental row echelon form over Q.
    class Echelon {
     public:
      bool insert(std::vector<Rational> v) {
        for (auto const& [pivot, row] : _rows) {
          if (!v[pivot].is_zero()) {
            Rational factor = v[pivot];
            for (std::size_t j = 0; j < v.size(); ++j) {
              if (!row[j].is_zero()) {
                v[j] -= factor * row[j];
              }
            }
          }
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
          if (!v[j].is_zero()) {
            Rational inv = Rational(1) / v[j];
            for (auto& x : v) {
              x *= inv;
            }
            _rows.emplace_back(j, std::move(v));
            return true;
          }
        }
        return false;
      }

     private:
      std::vector<std::pair<std::size_t, std::vector<Rational>>> _rows;
    };

  }  // namespace

  std::vector<std::vector<NerveChain>> nerve_chains(FinCategory const& c, std::size_t max_length) {
    std::vector<std::vector<NerveChain>> levels(max_length + 1);
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      levels[0].push_back({x, x, {}});
    }
    for (std::size_t p = 1; p <= max_length; ++p) {
      for (auto const& ch : levels[p - 1]) {
        for (auto f : c.non_identities_from(ch.end)) {
          NerveChain next = ch;
          next.morphisms.push_back(f);
          next.end = c.target(f);
          levels[p].push_back(std::move(next));
        }
      }
    }
    return levels;
  }

  ChainComplex nerve(FinCategory const& c, std::size_t top) {
    auto k = ModuleFunctor::constant(c, Variance::covariant, 1);
    auto n = ModuleFunctor::constant(c, Variance::contravariant, 1);
    return build_bar(c, ChainIndex(c, top), n, k);
  }

  std::vector<std::size_t> nerve_homology_dims(FinCategory const& c, std::size_t bound) {
    return truncated_homology(nerve(c, bound + 1), bound);
  }

  ChainComplex bar_complex(FinCategory const& c, ModuleFunctor const& n, ModuleFunctor const& m,
                           std::size_t top) {
    validate_pair(c, n, m);
    return build_bar(c, ChainIndex(c, top), n, m);
  }

  TensorProduct functor_tensor_product(FinCategory const& c, ModuleFunctor const& n,
                                       ModuleFunctor const& m) {
    auto const cx = bar_complex(c, n, m, 1);
    auto const d1 = cx.differential(1);
    std::size_t const dim0 = cx.dim(0);

    Echelon ech;
    for (std::size_t col = 0; col < d1.cols(); ++col) {
      std::vector<Rational> v(dim0);
      for (auto const& e : d1.column(col)) {
        v[e.row] = e.value;
      }
      ech.insert(std::move(v));
    }
    TensorProduct out;
    std::size_t   pos = 0;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      for (std::size_t a = 0; a < n.dims[x]; ++a) {
        for (std::size_t b = 0; b < m.dims[x]; ++b, ++pos) {
          std::vector<Rational> v(dim0);
          v[pos] = 1;
          if (ech.insert(std::move(v))) {
            out.basis.push_back({x, a, b});
          }
        }
      }
    }
    out.dimension = out.basis.size();
    return out;
  }

  std::vector<std::size_t> tor_dims(FinCategory const& c, ModuleFunctor const& n, ModuleFunctor const& m,
                                    std::size_t bound) {
    return truncated_homology(bar_complex(c, n, m, bound + 1), bound);
  }

  ShapiroResult shapiro_check(FinCategory const& c, SetFunctor const& f, ModuleFunctor const& x,
                              std::size_t bound) {
    auto const elements = category_of_elements(c, f);
    auto const& cf      = elements.category;
    ShapiroResult r;
    r.over_elements = tor_dims(cf, pullback(x, elements.projection),
                               ModuleFunctor::constant(cf, Variance::covariant, 1), bound);
    r.over_base     = tor_dims(c, x, linearize(c, f), bound);
    r.agree         = r.over_elements == r.over_base;
    return r;
  }

  RestrictedTor restrict_tor(FinCategory const& source, FinCategory const& target, FinFunctor const& f,
                             ModuleFunctor const& n, ModuleFunctor const& m, std::size_t bound) {
    if (auto err = check_functor(source, target, f)) {
      throw ValidationError("not a functor: " + *err);
    }
    validate_pair(target, n, m);
    auto const        fn = pullback(n, f);
    auto const        fm = pullback(m, f);
    std::size_t const top = bound + 1;
    ChainIndex const  sidx(source, top);
    ChainIndex const  tidx(target, top);
    auto const        scx = build_bar(source, sidx, fn, fm);
    auto const        tcx = build_bar(target, tidx, n, m);

    ChainMap map;
    for (std::size_t p = 0; p <= top; ++p) {
      auto const            soff = level_offsets(sidx.levels[p], fn, fm);
      auto const            toff = level_offsets(tidx.levels[p], n, m);
      SparseMatrix::Builder b(toff.back(), soff.back());
      for (std::size_t k = 0; k < sidx.levels[p].size(); ++k) {
        auto const& ch = sidx.levels[p][k];
        NerveChain  image{f.on_objects[ch.start], f.on_objects[ch.end], {}};
        bool        degenerate = false;
        for (auto g : ch.morphisms) {
          auto fg = f.on_morphisms[g];
          degenerate |= target.is_identity(fg);
          image.morphisms.push_back(fg);
        }
        if (degenerate) {
          continue;
        }
        std::size_t const row0 = toff[tidx.find(image)];
        for (std::size_t i = 0; i < soff[k + 1] - soff[k]; ++i) {
          b.add(row0 + i, soff[k] + i, 1);
        }
      }
      map.components.push_back(std::move(b).build());
    }

    RestrictedTor r;
    r.source_dims = truncated_homology(scx, bound);
    r.target_dims = truncated_homology(tcx, bound);
    r.induced     = induced_map_on_homology(scx, tcx, map);
    r.induced.resize(bound + 1);
    return r;
  }

  ThomasonResult thomason_check(FinCategory const& c, CatDiagram const& d, std::size_t bound) {
    ThomasonResult r;
    r.nerve_side = nerve_homology_dims(grothendieck(c, d).category, bound);

    std::size_t const top = bound + 1;
    ChainIndex const  idx(c, top);
    std::vector<ChainIndex>   fibre_chains;
    std::vector<ChainComplex> fibre_nerves;
    for (auto const& fc : d.values) {
      fibre_chains.emplace_back(fc, top);
      fibre_nerves.push_back(nerve(fc, top));
    }

    // M_q(c) = normalized q-chains on the nerve of F(c).
    std::vector<ModuleFunctor> mq(top + 1);
    for (std::size_t q = 0; q <= top; ++q) {
      mq[q].variance = Variance::covariant;
      for (std::size_t x = 0; x < c.num_objects(); ++x) {
        mq[q].dims.push_back(fibre_chains[x].levels[q].size());
      }
      for (std::size_t phi = 0; phi < c.num_morphisms(); ++phi) {
        auto const& from = fibre_chains[c.source(phi)];
        auto const& to   = fibre_chains[c.target(phi)];
        auto const& tcat = d.values[c.target(phi)];
        auto const& fun  = d.maps[phi];
        SparseMatrix::Builder b(to.levels[q].size(), from.levels[q].size());
        for (std::size_t k = 0; k < from.levels[q].size(); ++k) {
          auto const& ch = from.levels[q][k];
          NerveChain  image{fun.on_objects[ch.start], fun.on_objects[ch.end], {}};
          bool        degenerate = false;
          for (auto g : ch.morphisms) {
            degenerate |= tcat.is_identity(fun.on_morphisms[g]);
            image.morphisms.push_back(fun.on_morphisms[g]);
          }
          if (!degenerate) {
            b.add(to.find(image), k, 1);
          }
        }
        mq[q].maps.push_back(std::move(b).build());
      }
    }
    auto const k = ModuleFunctor::constant(c, Variance::contravariant, 1);

    // Block offsets of (p, q) inside total degree p + q.
    std::vector<std::vector<std::size_t>> block(top + 1, std::vector<std::size_t>(top + 1, 0));
    std::vector<std::size_t>              dims(top + 1, 0);
    for (std::size_t deg = 0; deg <= top; ++deg) {
      for (std::size_t p = 0; p <= deg; ++p) {
        block[p][deg - p] = dims[deg];
        dims[deg] += level_offsets(idx.levels[p], k, mq[deg - p]).back();
      }
    }
    ChainComplex tot(dims);
    for (std::size_t deg = 1; deg <= top; ++deg) {
      SparseMatrix::Builder b(dims[deg - 1], dims[deg]);
      for (std::size_t p = 0; p <= deg; ++p) {
        std::size_t const q = deg - p;
        if (p >= 1) {
          add_bar_differential(c, idx, k, mq[q], p, b, block[p - 1][q], block[p][q], 1);
        }
        if (q >= 1) {
          std::int64_t const sign = p % 2 == 0 ? 1 : -1;
          auto const         src  = level_offsets(idx.levels[p], k, mq[q]);
          auto const         tgt  = level_offsets(idx.levels[p], k, mq[q - 1]);
          for (std::size_t ch = 0; ch < idx.levels[p].size(); ++ch) {
            auto const  dv = fibre_nerves[idx.levels[p][ch].start].differential(q);
            for (std::size_t col = 0; col < dv.cols(); ++col) {
              for (auto const& e : dv.column(col)) {
                b.add(block[p][q - 1] + tgt[ch] + e.row, block[p][q] + src[ch] + col, e.value * Rational(sign));
              }
            }
          }
        }
      }
      tot.set_differential(deg, std::move(b).build());
    }
    r.bicomplex_side = truncated_homology(tot, bound);
    r.agree          = r.nerve_side == r.bicomplex_side;
    return r;
  }

}  // namespace repchar
