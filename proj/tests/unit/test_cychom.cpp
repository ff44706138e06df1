#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "repchar/cychom/cyclic_homology.hpp"
#include "repchar/errors.hpp"

using namespace repchar;

namespace {

  std::size_t pow_size(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
      r *= base;
    }
    return r;
  }

  // Conjugacy class count by brute-force orbit enumeration.
  std::size_t class_count(FiniteGroup const& g) {
    std::set<std::set<std::size_t>> orbits;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::set<std::size_t> orbit;
      for (std::size_t h = 0; h < g.order(); ++h) {
        orbit.insert(g.mul(g.mul(h, x), g.inv(h)));
      }
      orbits.insert(orbit);
    }
    return orbits.size();
  }

  // Maschke/Morita: Q[G] is a product of c matrix algebras over division
  // algebras with commutative centres; over Q each contributes HC_{2n} of
  // its centre, and the total HC_{2n} has dimension c.
  GradedDims maschke(std::size_t classes, std::size_t bound) {
    GradedDims d(bound + 1, 0);
    for (std::size_t q = 0; q <= bound; q += 2) {
      d[q] = classes;
    }
    return d;
  }

  // Connes complex oracle: C^lambda_q = C_q / (1 - t) with differential b,
  // built from scratch on tuples encoded little-endian. Over Q its homology
  // is cyclic homology.
  GradedDims connes_oracle(FiniteGroup const& g, std::size_t bound) {
    std::size_t const n = g.order();
    auto decode = [&](std::size_t code, std::size_t len) {
      std::vector<std::size_t> t(len);
      for (std::size_t i = 0; i < len; ++i) {
        t[i] = code % n;
        code /= n;
      }
      return t;
    };
    auto encode = [&](std::vector<std::size_t> const& t) {
      std::size_t code = 0;
      for (std::size_t i = t.size(); i-- > 0;) {
        code = code * n + t[i];
      }
      return code;
    };
    // b_q: C_q -> C_{q-1} and (1 - t)_q, for q = 0..bound+1.
    std::vector<SparseMatrix> b(bound + 2), omt(bound + 2);
    for (std::size_t q = 0; q <= bound + 1; ++q) {
      std::size_t const     size = pow_size(n, q + 1);
      SparseMatrix::Builder bb(q == 0 ? 0 : pow_size(n, q), size), tb(size, size);
      for (std::size_t code = 0; code < size; ++code) {
        auto const t = decode(code, q + 1);
        for (std::size_t i = 0; q > 0 && i <= q; ++i) {
          std::vector<std::size_t> f;
          if (i < q) {
            f = t;
            f[i] = g.mul(t[i], t[i + 1]);
            f.erase(f.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          } else {
            f.assign(t.begin(), t.end() - 1);
            f[0] = g.mul(t[q], t[0]);
          }
          bb.add(encode(f), code, i % 2 == 0 ? 1 : -1);
        }
        std::vector<std::size_t> r{t.back()};
        r.insert(r.end(), t.begin(), t.end() - 1);
        tb.add(code, code, 1);
        tb.add(encode(r), code, q % 2 == 0 ? -1 : 1);
      }
      b[q]   = std::move(bb).build();
      omt[q] = std::move(tb).build();
    }
    auto hstack = [](SparseMatrix const& x, SparseMatrix const& y) {
      std::vector<SparseMatrix::Triplet> trip;
      for (std::size_t c = 0; c < x.cols(); ++c) {
        for (auto const& e : x.column(c)) {
          trip.push_back({e.row, c, e.value});
        }
      }
      for (std::size_t c = 0; c < y.cols(); ++c) {
        for (auto const& e : y.column(c)) {
          trip.push_back({e.row, x.cols() + c, e.value});
        }
      }
      return SparseMatrix::from_triplets(x.rows(), x.cols() + y.cols(), trip);
    };
    // rank of b-bar_q : C_q/I_q -> C_{q-1}/I_{q-1}.
    auto rank_bar = [&](std::size_t q) -> std::size_t {
      if (q == 0) {
        return 0;
      }
      return hstack(b[q], omt[q - 1]).rank() - omt[q - 1].rank();
    };
    GradedDims out;
    for (std::size_t q = 0; q <= bound; ++q) {
      std::size_t const quotient = pow_size(n, q + 1) - omt[q].rank();
      out.push_back(quotient - rank_bar(q) - rank_bar(q + 1));
    }
    return out;
  }

}  // namespace

TEST_CASE("cyclic module sizes") {
  auto const one = build_cyclic_module(FiniteGroup::trivial(), 4);
  for (std::size_t q = 0; q <= 4; ++q) {
    CHECK(one.dim(q) == 1);
  }
  auto const z2 = build_cyclic_module(FiniteGroup::cyclic(2), 4);
  for (std::size_t q = 0; q <= 4; ++q) {
    CHECK(z2.dim(q) == pow_size(2, q + 1));
  }
  // Class summands partition the tuples.
  auto const s3 = FiniteGroup::symmetric(3);
  for (std::size_t q = 0; q <= 2; ++q) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      total += build_cyclic_module(s3, 2, {c, false}).dim(q);
    }
    CHECK(total == pow_size(6, q + 1));
  }
  CHECK(build_cyclic_module(FiniteGroup::cyclic(3), 2, {std::nullopt, true}).dim(2) == 26);
  CHECK_THROWS_AS(build_cyclic_module(s3, 1, {5, false}), ValidationError);
}

TEST_CASE("bicomplex identities") {
  CHECK(build_cyclic_module(FiniteGroup::symmetric(3), 3).check_identities() == std::nullopt);
  for (auto const& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(4),
                        FiniteGroup::quaternion(), FiniteGroup::dihedral(4)}) {
    CHECK(build_cyclic_module(g, 2).check_identities() == std::nullopt);
    CHECK(build_cyclic_module(g, 2, {0, false}).check_identities() == std::nullopt);
    CHECK(build_cyclic_module(g, 2, {std::nullopt, true}).check_identities() == std::nullopt);
  }
  auto const m = build_cyclic_module(FiniteGroup::cyclic(3), 4);
  CHECK(cyclic_total_complex(m, 4).first_d_squared_failure() == std::nullopt);
  CHECK_THROWS_AS(cyclic_total_complex(m, 5), ValidationError);
}

TEST_CASE("hc_dims worked values") {
  CHECK(hc_dims(FiniteGroup::trivial(), 4) == GradedDims{1, 0, 1, 0, 1});
  CHECK(hc_dims(FiniteGroup::cyclic(2), 4) == GradedDims{2, 0, 2, 0, 2});
  CHECK(hc_dims(FiniteGroup::cyclic(3), 2) == GradedDims{3, 0, 3});
}

TEST_CASE("hc_dims against the Connes complex") {
  CHECK(hc_dims(FiniteGroup::cyclic(2), 4) == connes_oracle(FiniteGroup::cyclic(2), 4));
  CHECK(hc_dims(FiniteGroup::cyclic(3), 3) == connes_oracle(FiniteGroup::cyclic(3), 3));
  CHECK(hc_dims(FiniteGroup::cyclic(4), 2) == connes_oracle(FiniteGroup::cyclic(4), 2));
  CHECK(hc_dims(FiniteGroup::symmetric(3), 2) == connes_oracle(FiniteGroup::symmetric(3), 2));
}

TEST_CASE("splitting by conjugacy class agrees with the whole bicomplex") {
  for (auto const& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
    std::size_t const bound = g.order() == 3 ? 3 : 1;
    auto dims = homology_dims(cyclic_total_complex(build_cyclic_module(g, bound + 1), bound + 1));
    dims.resize(bound + 1);
    CHECK(hc_dims(g, bound) == dims);
  }
}

TEST_CASE("HC_0 counts conjugacy classes") {
  for (auto const& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(5),
                        FiniteGroup::cyclic(6), FiniteGroup::symmetric(3), FiniteGroup::quaternion(),
                        FiniteGroup::dihedral(4), FiniteGroup::dihedral(5), FiniteGroup::dihedral(6)}) {
    CHECK(hc_dims(g, 0)[0] == class_count(g));
  }
}

TEST_CASE("Maschke periodicity") {
  CHECK(hc_dims(FiniteGroup::cyclic(4), 4) == maschke(4, 4));
  CHECK(hc_dims(FiniteGroup::quaternion(), 2) == maschke(5, 2));
  CHECK(hc_dims(FiniteGroup::dihedral(4), 2) == maschke(5, 2));
}

TEST_CASE("reduced cyclic homology") {
  CHECK(reduced_hc_dims(FiniteGroup::trivial(), 4) == GradedDims{0, 0, 0, 0, 0});
  CHECK(reduced_hc_dims(FiniteGroup::cyclic(2), 4) == GradedDims{1, 0, 1, 0, 1});
  CHECK(reduced_hc_dims(FiniteGroup::cyclic(3), 0) == GradedDims{2});
  auto const base = hc_dims(FiniteGroup::trivial(), 3);
  for (auto const& g : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    std::size_t const bound = g.order() == 6 ? 2 : 3;
    auto const full = hc_dims(g, bound);
    auto const red  = reduced_hc_dims(g, bound);
    for (std::size_t q = 0; q <= bound; ++q) {
      CHECK(full[q] == red[q] + base[q]);
    }
  }
}

TEST_CASE("hc0_basis") {
  CHECK(hc0_basis(FiniteGroup::trivial()).representatives.size() == 1);
  CHECK(hc0_basis(FiniteGroup::cyclic(5)).representatives.size() == 5);
  auto const s3 = FiniteGroup::symmetric(3);
  auto const h  = hc0_basis(s3);
  REQUIRE(h.representatives.size() == 3);
  // Each element is homologous to its class representative: g - rep lies
  // in the image of d_1 on the total complex.
  auto const tot = cyclic_total_complex(build_cyclic_module(s3, 1), 1);
  auto const d1  = tot.differential(1);
  std::size_t const base_rank = d1.rank();
  for (std::size_t x = 0; x < s3.order(); ++x) {
    std::size_t const rep = h.representatives[h.class_of[x]];
    CHECK(h.class_of[rep] == h.class_of[x]);
    if (rep == x) {
      continue;
    }
    std::vector<SparseMatrix::Triplet> trip;
    for (std::size_t c = 0; c < d1.cols(); ++c) {
      for (auto const& e : d1.column(c)) {
        trip.push_back({e.row, c, e.value});
      }
    }
    // Degree-0 basis in column 0 is ordered by element code.
    trip.push_back({x, d1.cols(), Rational(1)});
    trip.push_back({rep, d1.cols(), Rational(-1)});
    CHECK(SparseMatrix::from_triplets(d1.rows(), d1.cols() + 1, trip).rank() == base_rank);
  }
  // Representatives are pairwise non-homologous.
  CHECK(tot.dim(0) - base_rank == h.representatives.size());
}
