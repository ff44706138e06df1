//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/crossedcat/delta_s.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "repchar/errors.hpp"

namespace repchar {

  namespace {

    std::size_t binomial(std::size_t n, std::size_t k) {
      if (k > n) {
        return 0;
      }
      k             = std::min(k, n - k);
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    std::size_t factorial(std::size_t n) {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

  }  // namespace

  DeltaSMorphism::DeltaSMorphism(std::size_t n, std::vector<Monomial> monomials)
      : _n(n), _monomials(std::move(monomials)) {
    if (_monomials.empty()) {
      throw ValidationError("a morphism needs at least one monomial");
    }
    std::vector<bool> seen(n + 1, false);
    std::size_t       count = 0;
    for (auto const& mono : _monomials) {
      for (auto v : mono) {
        if (v > n) {
          throw ValidationError("variable x" + std::to_string(v) + " exceeds source [" + std::to_string(n) + "]");
        }
        if (seen[v]) {
          throw ValidationError("variable x" + std::to_string(v) + " occurs twice");
        }
        seen[v] = true;
        ++count;
      }
    }
    if (count != n + 1) {
      throw ValidationError("monomials do not use every variable x0..x" + std::to_string(n));
    }
  }

  DeltaSMorphism DeltaSMorphism::identity(std::size_t n) {
    std::vector<Monomial> monos;
    for (std::uint32_t i = 0; i <= n; ++i) {
      monos.push_back({i});
    }
    return DeltaSMorphism(n, std::move(monos));
  }

  DeltaSMorphism DeltaSMorphism::parse(std::string_view text) {
    std::vector<Monomial> monos(1);
    std::size_t           vars = 0;
    std::size_t           pos  = 0;
    bool                  saw_one = false;
    auto fail = [&](std::string const& what) {
      throw ValidationError("cannot parse morphism '" + std::string(text) + "': " + what);
    };
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '|') {
        if (monos.back().empty() && !saw_one) {
          fail("empty factor; write 1 for the empty monomial");
        }
        monos.emplace_back();
        saw_one = false;
        ++pos;
      } else if (c == '1') {
        if (!monos.back().empty() || saw_one) {
          fail("stray 1 at offset " + std::to_string(pos));
        }
        saw_one = true;
        ++pos;
      } else if (c == 'x') {
        if (saw_one) {
          fail("variable after 1 at offset " + std::to_string(pos));
        }
        ++pos;
        std::size_t start = pos;
        std::uint32_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = v * 10 + static_cast<std::uint32_t>(text[pos] - '0');
          ++pos;
        }
        if (pos == start) {
          fail("x without an index at offset " + std::to_string(start));
        }
        monos.back().push_back(v);
        ++vars;
      } else {
        fail("unexpected character '" + std::string(1, c) + "'");
      }
    }
    if (monos.back().empty() && !saw_one) {
      fail("empty factor; write 1 for the empty monomial");
    }
    if (vars == 0) {
      fail("no variables");
    }
    return DeltaSMorphism(vars - 1, std::move(monos));
  }

  std::vector<std::uint32_t> DeltaSMorphism::concatenation() const {
    std::vector<std::uint32_t> c;
    c.reserve(_n + 1);
    for (auto const& mono : _monomials) {
      c.insert(c.end(), mono.begin(), mono.end());
    }
    return c;
  }

  std::string DeltaSMorphism::to_string() const {
    std::string s;
    for (std::size_t j = 0; j < _monomials.size(); ++j) {
      if (j) {
        s += '|';
      }
      if (_monomials[j].empty()) {
        s += '1';
      }
      for (auto v : _monomials[j]) {
        s += 'x' + std::to_string(v);
      }
    }
    return s;
  }

  DeltaSMorphism compose_deltaS(DeltaSMorphism const& f1, DeltaSMorphism const& f2) {
    if (f1.source() != f2.target()) {
      throw ValidationError("cannot compose " + f1.to_string() + " after " + f2.to_string()
                            + ": arities do not match");
    }
    std::vector<DeltaSMorphism::Monomial> monos;
    monos.reserve(f1.target() + 1);
    for (auto const& mono : f1.monomials()) {
      DeltaSMorphism::Monomial out;
      for (auto k : mono) {
        auto const& sub = f2.monomial(k);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      monos.push_back(std::move(out));
    }
    return DeltaSMorphism(f2.source(), std::move(monos));
  }

  SimplicialFactorization factorize_sym(DeltaSMorphism const& f) {
    SimplicialFactorization fac;
    fac.target = f.target();
    fac.sigma.resize(f.source() + 1);
    std::size_t p = 0;
    for (std::size_t j = 0; j <= f.target(); ++j) {
      for (auto v : f.monomial(j)) {
        fac.sigma[v] = p++;
        fac.g.push_back(j);
      }
    }
    return fac;
  }

  DeltaSMorphism monotone_morphism(std::vector<std::size_t> const& g, std::size_t target) {
    if (g.empty()) {
      throw ValidationError("monotone map with empty source");
    }
    std::vector<DeltaSMorphism::Monomial> monos(target + 1);
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (g[p] > target || (p > 0 && g[p] < g[p - 1])) {
        throw ValidationError("map is not monotone into [" + std::to_string(target) + "]");
      }
      monos[g[p]].push_back(static_cast<std::uint32_t>(p));
    }
    return DeltaSMorphism(g.size() - 1, std::move(monos));
  }

  DeltaSMorphism permutation_morphism(std::vector<std::size_t> const& sigma) {
    std::vector<DeltaSMorphism::Monomial> monos(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (sigma[i] >= sigma.size() || !monos[sigma[i]].empty()) {
        throw ValidationError("not a permutation");
      }
      monos[sigma[i]].push_back(static_cast<std::uint32_t>(i));
    }
    return DeltaSMorphism(sigma.size() - 1, std::move(monos));
  }

  DeltaSMorphism recompose(SimplicialFactorization const& fac) {
    return compose_deltaS(monotone_morphism(fac.g, fac.target), permutation_morphism(fac.sigma));
  }

  GroupHom psi_sym(DeltaSMorphism const& f) {
    std::vector<FreeWord> images;
    for (auto const& mono : f.monomials()) {
      std::vector<std::int32_t> letters;
      for (auto v : mono) {
        letters.push_back(static_cast<std::int32_t>(v) + 1);
      }
      images.emplace_back(std::move(letters));
    }
    return GroupHom(f.target() + 1, f.source() + 1, std::move(images));
  }

  IntegerMatrix abelianize_psi_sym(DeltaSMorphism const& f) {
    IntegerMatrix a(f.source() + 1, f.target() + 1);
    for (std::size_t j = 0; j <= f.target(); ++j) {
      for (auto v : f.monomial(j)) {
        a(v, j) = 1;
      }
    }
    return a;
  }

  DecoratedHom psi_tilde_sym(DeltaSMorphism const& f, std::int64_t k) {
    DecoratedHom out{psi_sym(f), {}, {}};
    out.source.arity = f.target() + 1;
    out.source.decoration.assign(out.source.arity, k);
    out.target.arity = f.source() + 1;
    auto a           = abelianize_hom(out.hom);
    std::vector<BigInt> v(out.source.arity, BigInt(k));
    auto                image = a * v;
    for (auto const& x : image) {
      if (x != k) {
        throw InvariantViolation("abelianization of " + f.to_string()
                                 + " does not preserve the constant decoration "
                                 + std::to_string(k));
      }
      out.target.decoration.push_back(static_cast<std::int64_t>(x));
    }
    return out;
  }

  std::size_t hom_count(std::size_t n, std::size_t m) {
    return factorial(n + 1) * binomial(n + m + 1, m);
  }

  DeltaSMorphism unrank_morphism(std::size_t n, std::size_t m, std::size_t rank) {
    std::size_t const bars = binomial(n + m + 1, m);
    if (rank >= hom_count(n, m)) {
      throw ValidationError("morphism rank out of range");
    }
    std::size_t perm_rank = rank / bars;
    std::size_t bar_rank  = rank % bars;

    // Lehmer code, lexicographic.
    std::vector<std::uint32_t> pool(n + 1);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint32_t> perm;
    for (std::size_t k = n + 1; k-- > 0;) {
      std::size_t f = factorial(k);
      std::size_t d = perm_rank / f;
      perm_rank %= f;
      perm.push_back(pool[d]);
      pool.erase(pool.begin() + static_cast<long>(d));
    }

    // Bar slots among n + m + 1 positions, colexicographic.
    std::vector<std::size_t> slots(m);
    for (std::size_t k = m; k-- > 0;) {
      std::size_t c = k;
      while (binomial(c + 1, k + 1) <= bar_rank) {
        ++c;
      }
      slots[k] = c;
      bar_rank -= binomial(c, k + 1);
    }
    std::vector<DeltaSMorphism::Monomial> monos(m + 1);
    std::size_t                           block = 0, next_var = 0, next_bar = 0;
    for (std::size_t pos = 0; pos < n + m + 1; ++pos) {
      if (next_bar < m && slots[next_bar] == pos) {
        ++block;
        ++next_bar;
      } else {
        monos[block].push_back(perm[next_var++]);
      }
    }
    return DeltaSMorphism(n, std::move(monos));
  }

  std::size_t rank_morphism(DeltaSMorphism const& f) {
    std::size_t const n = f.source(), m = f.target();
    auto              perm = f.concatenation();
    std::size_t       perm_rank = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t smaller = 0;
      for (std::size_t j = i + 1; j <= n; ++j) {
        smaller += perm[j] < perm[i] ? 1 : 0;
      }
      perm_rank += smaller * factorial(n - i);
    }
    std::size_t bar_rank = 0, pos = 0;
    for (std::size_t j = 0; j < m; ++j) {
      pos += f.monomial(j).size();
      bar_rank += binomial(pos, j + 1);
      ++pos;
    }
    return perm_rank * binomial(n + m + 1, m) + bar_rank;
  }

  std::vector<DeltaSMorphism> all_morphisms(std::size_t n, std::size_t m) {
    std::vector<DeltaSMorphism> out;
    std::size_t const           count = hom_count(n, m);
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
      out.push_back(unrank_morphism(n, m, r));
    }
    return out;
  }

}  // namespace repchar
