#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "repchar/errors.hpp"
#include "repchar/rephom/gln.hpp"
#include "repchar/rephom/representation_homology.hpp"

using namespace repchar;

namespace {

  // Presentation of Z/2 with the redundant relator x^3 x^-1: the face
  // matrices have entry 3, so small windows cannot see all relations.
  SimplicialGroupModel slow_z2_model(std::size_t N) {
    return CellularModelBuilder({Cell{"x", 0, {}}, Cell{"r", 1, {FreeWord::parse("x0^3"), FreeWord::parse("x0")}}})
        .build(N);
  }

  // Counts monomials in free graded-commutative generators directly.
  GradedDims enumerate_monomials(std::vector<std::size_t> const& ranks, std::size_t bound) {
    std::vector<std::size_t> degrees;
    for (std::size_t q = 1; q < ranks.size(); ++q) {
      for (std::size_t g = 0; g < ranks[q]; ++g) {
        degrees.push_back(q);
      }
    }
    GradedDims out(bound + 1, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t deg) {
      if (i == degrees.size()) {
        ++out[deg];
        return;
      }
      std::size_t const max_power = degrees[i] % 2 == 1 ? 1 : bound;
      for (std::size_t e = 0; e <= max_power && deg + e * degrees[i] <= bound; ++e) {
        rec(i + 1, deg + e * degrees[i]);
      }
    };
    rec(0, 0);
    return out;
  }

  Rational det(RationalMatrix m) {
    std::size_t const n = m.rows();
    Rational          d = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      if (p != c) {
        for (std::size_t k = 0; k < n; ++k) {
          std::swap(m(p, k), m(c, k));
        }
        d = -d;
      }
      d *= m(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        Rational f = m(r, c) / m(c, c);
        for (std::size_t k = c; k < n; ++k) {
          m(r, k) -= f * m(c, k);
        }
      }
    }
    return d;
  }

  RationalMatrix inverse(RationalMatrix const& m) {
    std::size_t const                  n = m.rows();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Rational> e(n, 0);
      e[c] = 1;
      cols.push_back(*m.solve(e));
    }
    return RationalMatrix::from_columns(n, cols);
  }

  RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
      RationalMatrix m(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          m(r, c) = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
        }
      }
      if (!det(m).is_zero()) {
        return m;
      }
    }
  }

  std::vector<Rational> point_for(GlnPresentation const& g, std::vector<RationalMatrix> const& mats) {
    std::vector<Rational> pt(g.variables.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
      for (std::size_t r = 0; r < g.n; ++r) {
        for (std::size_t c = 0; c < g.n; ++c) {
          pt[g.entry_variable(i, r, c)] = mats[i](r, c);
        }
      }
      pt[g.inverse_variable(i)] = Rational(1) / det(mats[i]);
    }
    return pt;
  }

}  // namespace

TEST_CASE("hr_degree0 examples") {
  auto const torus = hr_degree0({2, {FreeWord::parse("x0 x1 x0^-1 x1^-1")}});
  CHECK(torus.group == AbelianGroup{2, {}});
  CHECK(torus.description == "k[Z^2]: Laurent polynomials in 2 variables");
  auto const z3 = hr_degree0({1, {FreeWord::parse("x0^3")}});
  CHECK(z3.group.to_string() == "Z/3");
  CHECK(z3.description == "k[Z/3]: basis t^w for w in Z/3");
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(hr_degree0({n, {}}).group == AbelianGroup{n, {}});
  }
}

TEST_CASE("free graded-commutative assembly") {
  CHECK(assemble_free_graded_commutative({0, 1}, 4) == GradedDims{1, 1, 0, 0, 0});
  CHECK(assemble_free_graded_commutative({0, 0, 1}, 6) == GradedDims{1, 0, 1, 0, 1, 0, 1});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::size_t> ranks(5, 0);
    for (std::size_t q = 1; q < ranks.size(); ++q) {
      ranks[q] = rng() % 3;
    }
    CHECK(assemble_free_graded_commutative(ranks, 6) == enumerate_monomials(ranks, 6));
  }
}

TEST_CASE("derived abelianization: corpus") {
  auto const f1 = hr_derived_abelianization(constant_model(1, 5), 3);
  CHECK(f1.h1 == AbelianGroup{1, {}});
  CHECK(f1.homotopy_ranks == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(f1.per_weight == GradedDims{1, 0, 0, 0});

  auto const s2 = hr_derived_abelianization(milnor_model(ReducedSimplicialSet::sphere(1), 5), 3);
  CHECK(s2.h1.is_trivial());
  CHECK(s2.homotopy_ranks == std::vector<std::size_t>{0, 1, 0, 0});
  CHECK(s2.per_weight == GradedDims{1, 1, 0, 0});

  auto const t2 = hr_derived_abelianization(torus_model(5), 3);
  CHECK(t2.h1 == AbelianGroup{2, {}});
  CHECK(t2.per_weight == GradedDims{1, 1, 0, 0});

  // Milnor model of S^2: one polynomial generator in degree 2.
  auto const s3 = hr_derived_abelianization(milnor_model(ReducedSimplicialSet::sphere(2), 6), 4);
  CHECK(s3.per_weight == GradedDims{1, 0, 1, 0, 1});

  auto const z2 = hr_derived_abelianization(slow_z2_model(4), 2);
  CHECK(z2.h1.to_string() == "Z/2");
  CHECK(z2.per_weight == GradedDims{1, 0, 0});

  CHECK_THROWS_AS(hr_derived_abelianization(torus_model(4), 3), ValidationError);
}

TEST_CASE("hr_degree0 matches the derived degree-0 row") {
  CHECK(hr_degree0({1, {}}).group == hr_derived_abelianization(constant_model(1, 4), 1).h1);
  CHECK(hr_degree0({2, {}}).group == hr_derived_abelianization(constant_model(2, 4), 1).h1);
  CHECK(hr_degree0({2, {FreeWord::parse("x0 x1 x0^-1 x1^-1")}}).group
        == hr_derived_abelianization(torus_model(4), 1).h1);
  CHECK(hr_degree0({1, {FreeWord::parse("x0^3 x0^-1")}}).group == hr_derived_abelianization(slow_z2_model(4), 1).h1);
}

TEST_CASE("window complex of the constant model") {
  for (std::size_t b = 1; b <= 4; ++b) {
    auto const w = window_homology(constant_model(1, 4), 2, b);
    CHECK(w.total == GradedDims{2 * b + 1, 0, 0});
    CHECK(w.by_weight.size() == 2 * b + 1);
  }
}

TEST_CASE("monomial complexes satisfy d^2 = 0") {
  std::vector<SimplicialGroupModel> corpus = {constant_model(2, 4), milnor_model(ReducedSimplicialSet::sphere(1), 4),
                                              torus_model(4), slow_z2_model(4),
                                              milnor_model(ReducedSimplicialSet::sphere(2), 4)};
  for (auto const& m : corpus) {
    for (std::size_t b = 1; b <= 2; ++b) {
      auto const mc = monomial_complex(m, 3, b);
      CHECK(mc.complex.first_d_squared_failure() == std::nullopt);
      for (std::size_t q = 0; q <= 3; ++q) {
        for (auto const& v : mc.basis[q]) {
          for (auto x : v) {
            CHECK(std::abs(x) <= static_cast<std::int64_t>(b));
          }
        }
      }
    }
  }
}

TEST_CASE("brute force agrees with derived abelianization") {
  struct Case {
    std::string          name;
    SimplicialGroupModel model;
    std::size_t          bound, window;
  };
  std::vector<Case> corpus = {
      {"F1", constant_model(1, 5), 3, 3},
      {"F2", constant_model(2, 4), 2, 2},
      {"S1 Milnor", milnor_model(ReducedSimplicialSet::sphere(1), 5), 3, 3},
      {"torus", torus_model(4), 2, 2},
      {"S2 Milnor", milnor_model(ReducedSimplicialSet::sphere(2), 5), 3, 1},
      {"Z/2", slow_z2_model(4), 2, 2},
  };
  for (auto const& c : corpus) {
    CAPTURE(c.name);
    auto const derived = hr_derived_abelianization(c.model, c.bound);
    auto const window  = hr_bruteforce_window(c.model, c.bound, c.window);
    CHECK(window.report_empty());
    CHECK(window.trusted_degrees.size() == c.bound + 1);
    CHECK(hr_routes_agree(derived, window));
  }
}

TEST_CASE("Milnor S^1 model: stabilized (1,1,0,0)") {
  auto const w = hr_bruteforce_window(milnor_model(ReducedSimplicialSet::sphere(1), 5), 3, 3);
  CHECK(w.report_empty());
  REQUIRE(w.stable.size() == 1);
  CHECK(w.stable.begin()->second == GradedDims{1, 1, 0, 0});
}

TEST_CASE("torus weight table is k[Z^2] (x) exterior(theta)") {
  auto const w = hr_bruteforce_window(torus_model(4), 2, 2);
  CHECK(w.report_empty());
  CHECK(w.stable.size() == 25);
  std::set<Weight> expected;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      expected.insert(Weight{BigInt(a), BigInt(b)});
    }
  }
  std::set<Weight> found;
  for (auto const& [wt, dims] : w.stable) {
    found.insert(wt);
    CHECK(dims == GradedDims{1, 1, 0});
  }
  // The weight coordinates of Z^2 may differ from the naive ones by a
  // unimodular change; only the count is basis-independent.
  CHECK(found.size() == expected.size());
}

TEST_CASE("torsion weights collapse") {
  auto const w = window_homology(slow_z2_model(4), 1, 2);
  CHECK(w.by_weight.size() == 2);
  for (auto const& [wt, dims] : w.by_weight) {
    CHECK(dims == GradedDims{1, 0});
  }
}

TEST_CASE("too small a window is reported") {
  auto const small = hr_bruteforce_window(slow_z2_model(4), 1, 1);
  CHECK_FALSE(small.report_empty());
  CHECK(std::find(small.trusted_degrees.begin(), small.trusted_degrees.end(), 0) == small.trusted_degrees.end());
  // Untrusted entries are excluded, so the routes still agree.
  CHECK(hr_routes_agree(hr_derived_abelianization(slow_z2_model(4), 1), small));
  CHECK(hr_bruteforce_window(slow_z2_model(4), 1, 2).report_empty());
  CHECK_THROWS_AS(hr_bruteforce_window(slow_z2_model(4), 1, 0), ValidationError);
}

TEST_CASE("GL_n degree 0: examples") {
  auto const free1 = rep_ring_gln_degree0({1, {}}, 2);
  CHECK(free1.variables == std::vector<std::string>{"x0_11", "x0_12", "x0_21", "x0_22", "d0"});
  CHECK(free1.ideal.empty());
  CHECK(free1.localization.size() == 1);
  CHECK(free1.localization[0].to_string(free1.variables) == "x0_11*x0_22*d0 - x0_12*x0_21*d0 - 1");

  auto const z2 = rep_ring_gln_degree0({1, {FreeWord::parse("x0^2")}}, 1);
  REQUIRE(z2.ideal.size() == 1);
  CHECK(z2.ideal[0].to_string(z2.variables) == "x0_11^2 - 1");

  auto const comm = rep_ring_gln_degree0({2, {FreeWord::parse("x0 x1 x0^-1 x1^-1")}}, 2);
  CHECK(comm.ideal.size() == 4);
  CHECK(comm.variables.size() == 10);
  CHECK_THROWS_AS(rep_ring_gln_degree0({1, {}}, 0), ValidationError);
  CHECK_THROWS_AS(rep_ring_gln_degree0({1, {FreeWord::parse("x1")}}, 1), ValidationError);
}

TEST_CASE("GL_n degree 0: numeric evaluation oracle") {
  std::mt19937_64 rng(13);
  for (std::size_t n : {2u, 3u}) {
    auto const comm = rep_ring_gln_degree0({2, {FreeWord::parse("x0 x1 x0^-1 x1^-1")}}, n);
    for (int trial = 0; trial < 5; ++trial) {
      auto const x  = random_invertible(rng, n);
      auto const y  = random_invertible(rng, n);
      auto const pt = point_for(comm, {x, y});
      for (auto const& loc : comm.localization) {
        CHECK(loc.evaluate(pt).is_zero());
      }
      auto const w = x * y * inverse(x) * inverse(y);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Rational expect = w(r, c) - (r == c ? Rational(1) : Rational(0));
          CHECK(comm.ideal[r * n + c].evaluate(pt) == expect);
        }
      }
      // Y = X^2 + X commutes with X, so the point lies on Rep_n.
      auto y2 = x * x;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          y2(r, c) += x(r, c);
        }
      }
      if (det(y2).is_zero()) {
        continue;
      }
      auto const on = point_for(comm, {x, y2});
      for (auto const& g : comm.ideal) {
        CHECK(g.evaluate(on).is_zero());
      }
    }
  }
}
