//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/rephom/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "repchar/errors.hpp"

namespace repchar {

  Polynomial Polynomial::constant(std::size_t variables, Rational const& c) {
    Polynomial p(variables);
    p.add_term(Monomial(variables, 0), c);
    return p;
  }

  Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
    if (i >= variables) {
      throw ValidationError("polynomial variable index out of range");
    }
    Polynomial p(variables);
    Monomial   m(variables, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
  }

  void Polynomial::add_term(Monomial const& m, Rational const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = _terms.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        _terms.erase(it);
      }
    }
  }

  Polynomial Polynomial::operator+(Polynomial const& o) const {
    if (o._variables != _variables) {
      throw ValidationError("polynomials over different variable sets");
    }
    Polynomial r = *this;
    for (auto const& [m, c] : o._terms) {
      r.add_term(m, c);
    }
    return r;
  }

  Polynomial Polynomial::operator-(Polynomial const& o) const {
    if (o._variables != _variables) {
      throw ValidationError("polynomials over different variable sets");
    }
    Polynomial r = *this;
    for (auto const& [m, c] : o._terms) {
      r.add_term(m, -c);
    }
    return r;
  }

  Polynomial Polynomial::operator*(Polynomial const& o) const {
    if (o._variables != _variables) {
      throw ValidationError("polynomials over different variable sets");
    }
    Polynomial r(_variables);
    for (auto const& [ma, ca] : _terms) {
      for (auto const& [mb, cb] : o._terms) {
        Monomial m(_variables);
        for (std::size_t i = 0; i < _variables; ++i) {
          m[i] = ma[i] + mb[i];
        }
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  Rational Polynomial::evaluate(std::vector<Rational> const& point) const {
    if (point.size() != _variables) {
      throw ValidationError("evaluation point has the wrong length");
    }
    Rational sum = 0;
    for (auto const& [m, c] : _terms) {
      Rational term = c;
      for (std::size_t i = 0; i < _variables; ++i) {
        for (std::uint32_t e = 0; e < m[i]; ++e) {
          term *= point[i];
        }
      }
      sum += term;
    }
    return sum;
  }

  std::string Polynomial::to_string(std::vector<std::string> const& names) const {
    if (_terms.empty()) {
      return "0";
    }
    std::vector<std::pair<Monomial, Rational>> order(_terms.begin(), _terms.end());
    auto degree = [](Monomial const& m) { return std::accumulate(m.begin(), m.end(), std::uint64_t{0}); };
    std::stable_sort(order.begin(), order.end(), [&](auto const& a, auto const& b) {
      auto da = degree(a.first), db = degree(b.first);
      return da != db ? da > db : a.first > b.first;
    });
    std::ostringstream s;
    bool               first = true;
    for (auto const& [m, c] : order) {
      bool const unit     = degree(m) > 0;
      bool const negative = c < Rational(0);
      Rational   mag      = negative ? -c : c;
      s << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      bool wrote = false;
      if (!(unit && mag == Rational(1))) {
        s << mag.to_string();
        wrote = true;
      }
      for (std::size_t i = 0; i < _variables; ++i) {
        if (m[i] == 0) {
          continue;
        }
        s << (wrote ? "*" : "") << names.at(i);
        if (m[i] > 1) {
          s << "^" << m[i];
        }
        wrote = true;
      }
    }
    return s.str();
  }

}  // namespace repchar
