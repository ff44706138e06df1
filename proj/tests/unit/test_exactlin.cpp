#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "repchar/errors.hpp"
#include "repchar/exactlin/chain_complex.hpp"
#include "repchar/exactlin/integer_matrix.hpp"
#include "repchar/exactlin/rational.hpp"
#include "repchar/exactlin/rational_matrix.hpp"
#include "repchar/exactlin/sparse_matrix.hpp"

using namespace repchar;

namespace {

  // Determinantal-divisor oracle: d_1 d_2 ... d_k = gcd of all k x k minors.
  BigInt minor_det(IntegerMatrix const& a, std::vector<std::size_t> const& r,
                   std::vector<std::size_t> const& c) {
    IntegerMatrix m(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        m(i, j) = a(r[i], c[j]);
      }
    }
    return m.determinant();
  }

  void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }

  std::vector<BigInt> invariant_factors_by_minors(IntegerMatrix const& a) {
    std::vector<BigInt> out;
    BigInt              prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      std::vector<std::vector<std::size_t>> rs, cs;
      subsets(a.rows(), k, rs);
      subsets(a.cols(), k, cs);
      BigInt g = 0;
      for (auto const& r : rs) {
        for (auto const& c : cs) {
          g = boost::multiprecision::gcd(g, minor_det(a, r, c));
        }
      }
      if (g == 0) {
        break;
      }
      out.push_back(g / prev);
      prev = g;
    }
    return out;
  }

  IntegerMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
    IntegerMatrix                       u = IntegerMatrix::identity(n);
    std::uniform_int_distribution<int>  pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (int step = 0; step < 8 && n > 1; ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) {
        continue;
      }
      long k = coef(rng);
      for (std::size_t c = 0; c < n; ++c) {
        u(i, c) += k * u(j, c);
      }
    }
    return u;
  }

  IntegerMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937& rng) {
    std::uniform_int_distribution<long> coef(-4, 4);
    IntegerMatrix                       m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = coef(rng);
      }
    }
    return m;
  }

  // Simplicial chain complex of a simplicial complex given by its facets.
  IntegerChainComplex simplicial_chains(std::vector<std::vector<int>> facets) {
    std::set<std::vector<int>> all;
    for (auto f : facets) {
      std::sort(f.begin(), f.end());
      std::size_t const n = f.size();
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            s.push_back(f[i]);
          }
        }
        all.insert(s);
      }
    }
    std::size_t top = 0;
    for (auto const& s : all) {
      top = std::max(top, s.size() - 1);
    }
    std::vector<std::map<std::vector<int>, std::size_t>> index(top + 1);
    for (auto const& s : all) {
      auto& m = index[s.size() - 1];
      m.emplace(s, m.size());
    }
    IntegerChainComplex c;
    for (auto const& m : index) {
      c.ranks.push_back(m.size());
    }
    c.differentials.resize(top + 1);
    for (std::size_t q = 1; q <= top; ++q) {
      IntegerMatrix d(c.ranks[q - 1], c.ranks[q]);
      for (auto const& [s, j] : index[q]) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          auto face = s;
          face.erase(face.begin() + static_cast<long>(i));
          d(index[q - 1].at(face), j) += (i % 2 == 0) ? 1 : -1;
        }
      }
      c.differentials[q] = d;
    }
    return c;
  }

  ChainComplex to_rational(IntegerChainComplex const& c) {
    ChainComplex r(c.ranks);
    for (std::size_t q = 1; q < c.ranks.size(); ++q) {
      r.set_differential(q, c.differentials[q].to_sparse());
    }
    return r;
  }

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  Rational a(BigInt(6), BigInt(-4));
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK((a + Rational(3, 2)).is_zero());
  CHECK(Rational::parse("10/4") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ValidationError);
  CHECK_THROWS_AS(Rational::parse("x/2"), ValidationError);
}

TEST_CASE("smith normal form examples") {
  auto id = smith_normal_form(IntegerMatrix::identity(2));
  CHECK(id.factors == std::vector<BigInt>{1, 1});

  IntegerMatrix a{{2, 4}, {6, 8}};
  auto          snf = smith_normal_form(a);
  CHECK(snf.factors == std::vector<BigInt>{2, 4});
  CHECK(snf.factors == invariant_factors_by_minors(a));
  CHECK(snf.left * a * snf.right == snf.diagonal);
  CHECK(abs(snf.left.determinant()) == 1);
  CHECK(abs(snf.right.determinant()) == 1);

  CHECK(smith_normal_form(IntegerMatrix(3, 2)).factors.empty());
  CHECK(smith_normal_form(IntegerMatrix(0, 0)).factors.empty());
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    auto        a   = random_matrix(r, c, rng);
    auto        snf = smith_normal_form(a);
    CHECK(snf.factors == invariant_factors_by_minors(a));
    CHECK(snf.left * a * snf.right == snf.diagonal);
    for (std::size_t i = 1; i < snf.factors.size(); ++i) {
      CHECK(snf.factors[i] % snf.factors[i - 1] == 0);
    }
  }
}

TEST_CASE("invariant factors are unchanged by unimodular transformations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a  = random_matrix(3, 4, rng);
    auto u  = random_unimodular(3, rng);
    auto v  = random_unimodular(4, rng);
    CHECK(smith_normal_form(u * a * v).factors == smith_normal_form(a).factors);
  }
}

TEST_CASE("rank plus nullity equals column count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_matrix(1 + trial % 5, 1 + trial % 6, rng);
    // sparsify
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if ((i + j + trial) % 3 == 0) {
          a(i, j) = 0;
        }
      }
    }
    auto       s = a.to_sparse();
    auto const k = s.to_dense().kernel();
    CHECK(s.rank() + k.cols() == s.cols());
    CHECK(s.rank() == s.to_dense().rank());
    CHECK((s.to_dense() * k).is_zero());
  }
}

TEST_CASE("sparse rank survives large coefficients") {
  SparseMatrix::Builder b(3, 3);
  BigInt                big = BigInt(1) << 80;
  b.add(0, 0, Rational(big));
  b.add(1, 0, Rational(big + 1));
  b.add(0, 1, Rational(big + 1));
  b.add(1, 1, Rational(big + 2));
  b.add(2, 2, Rational(BigInt(1), BigInt(3)));
  auto m = std::move(b).build();
  CHECK(m.rank() == 3);
  CHECK(m.to_dense().rank() == 3);
}

TEST_CASE("homology_dims examples") {
  ChainComplex iso({1, 1});
  iso.set_differential(1, SparseMatrix::from_triplets(1, 1, {{0, 0, Rational(2)}}));
  CHECK(homology_dims(iso) == std::vector<std::size_t>{0, 0});

  ChainComplex zero({3, 2});
  CHECK(homology_dims(zero) == std::vector<std::size_t>{3, 2});

  // boundary of the 2-simplex: a circle
  auto circle = simplicial_chains({{0, 1}, {1, 2}, {0, 2}});
  CHECK(homology_dims(to_rational(circle)) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("homology_dims rejects d^2 != 0") {
  ChainComplex bad({1, 1, 1});
  bad.set_differential(1, SparseMatrix::identity(1));
  bad.set_differential(2, SparseMatrix::identity(1));
  CHECK_THROWS_AS(homology_dims(bad), InvariantViolation);
}

TEST_CASE("integer homology examples") {
  IntegerChainComplex two;
  two.ranks         = {1, 1};
  two.differentials = {IntegerMatrix(), IntegerMatrix{{2}}};
  auto h            = homology_of_integer_complex(two);
  CHECK(h[0].to_string() == "Z/2");
  CHECK(h[1].is_trivial());

  IntegerChainComplex zero;
  zero.ranks         = {2, 1};
  zero.differentials = {IntegerMatrix(), IntegerMatrix(2, 1)};
  auto hz            = homology_of_integer_complex(zero);
  CHECK(hz[0].to_string() == "Z^2");
  CHECK(hz[1].to_string() == "Z");
}

TEST_CASE("rational homology matches free ranks of integer homology") {
  std::mt19937                       rng(99);
  std::uniform_int_distribution<int> vert(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<int>> facets;
    for (int f = 0; f < 6; ++f) {
      std::set<int> s;
      std::size_t   size = 1 + (f + trial) % 3;
      while (s.size() < size) {
        s.insert(vert(rng));
      }
      facets.emplace_back(s.begin(), s.end());
    }
    auto ic  = simplicial_chains(facets);
    auto hz  = homology_of_integer_complex(ic);
    auto hq  = homology_dims(to_rational(ic));
    REQUIRE(hz.size() == hq.size());
    for (std::size_t q = 0; q < hq.size(); ++q) {
      CHECK(hz[q].free_rank == hq[q]);
    }
  }
  // the real projective plane has 2-torsion in H_1
  auto rp2 = simplicial_chains({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 0}, {2, 0, 3},
                                {3, 4, 5}, {0, 4, 5}, {0, 1, 5}, {1, 2, 5}, {2, 3, 5}});
  auto h   = homology_of_integer_complex(rp2);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z/2");
  CHECK(h[2].is_trivial());
}

TEST_CASE("induced maps on homology") {
  auto         circle = to_rational(simplicial_chains({{0, 1}, {1, 2}, {0, 2}}));
  ChainMap     id{{SparseMatrix::identity(3), SparseMatrix::identity(3)}};
  auto         h = induced_map_on_homology(circle, circle, id);
  CHECK(h[0] == RationalMatrix::identity(1));
  CHECK(h[1] == RationalMatrix::identity(1));

  ChainMap zero{{SparseMatrix(3, 3), SparseMatrix(3, 3)}};
  auto     hz = induced_map_on_homology(circle, circle, zero);
  CHECK(hz[0].is_zero());
  CHECK(hz[1].is_zero());

  ChainMap broken{{SparseMatrix::identity(3), SparseMatrix(3, 3)}};
  CHECK_THROWS_AS(induced_map_on_homology(circle, circle, broken), ValidationError);
}

TEST_CASE("cokernel reduction") {
  // Z^2 / <(2, 0)> = Z/2 + Z
  IntegerMatrix a{{2}, {0}};
  Cokernel      ck(a);
  CHECK(ck.group().to_string() == "Z/2 + Z");
  CHECK(ck.reduce({BigInt(2), BigInt(0)}) == ck.reduce({BigInt(0), BigInt(0)}));
  CHECK(ck.reduce({BigInt(1), BigInt(0)}) != ck.reduce({BigInt(0), BigInt(0)}));
  CHECK(ck.reduce({BigInt(3), BigInt(5)}) == ck.reduce({BigInt(1), BigInt(5)}));
}
