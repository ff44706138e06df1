//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#include "repchar/exactlin/rational.hpp"

#include <ostream>

#include "repchar/errors.hpp"

namespace repchar {

  Rational::Rational(BigInt n, BigInt d) : _num(std::move(n)), _den(std::move(d)) {
    if (_den == 0) {
      throw ValidationError("rational with zero denominator");
    }
    normalize();
  }

  Rational Rational::parse(std::string_view text) {
    auto const slash = text.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(BigInt(std::string(text)));
      }
      return Rational(BigInt(std::string(text.substr(0, slash))),
                      BigInt(std::string(text.substr(slash + 1))));
    } catch (std::runtime_error const&) {
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
  }

  void Rational::normalize() {
    if (_den < 0) {
      _num = -_num;
      _den = -_den;
    }
    if (_num == 0) {
      _den = 1;
      return;
    }
    if (_den == 1) {
      return;
    }
    BigInt g = boost::multiprecision::gcd(_num, _den);
    if (g != 1) {
      _num /= g;
      _den /= g;
    }
  }

  Rational Rational::operator-() const {
    Rational r = *this;
    r._num = -r._num;
    return r;
  }

  Rational& Rational::operator+=(Rational const& other) {
    if (_den == 1 && other._den == 1) {
      _num += other._num;
      return *this;
    }
    _num = _num * other._den + other._num * _den;
    _den *= other._den;
    normalize();
    return *this;
  }

  Rational& Rational::operator-=(Rational const& other) {
    return *this += -other;
  }

  Rational& Rational::operator*=(Rational const& other) {
    _num *= other._num;
    if (_den == 1 && other._den == 1) {
      return *this;
    }
    _den *= other._den;
    normalize();
    return *this;
  }

  Rational& Rational::operator/=(Rational const& other) {
    if (other.is_zero()) {
      throw ValidationError("division by zero");
    }
    _num *= other._den;
    _den *= other._num;
    normalize();
    return *this;
  }

  std::string Rational::to_string() const {
    if (_den == 1) {
      return _num.str();
    }
    return _num.str() + "/" + _den.str();
  }

  std::ostream& operator<<(std::ostream& os, Rational const& q) {
    return os << q.to_string();
  }

}  // namespace repchar
