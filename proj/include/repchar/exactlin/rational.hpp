//
// repchar - exact computations with crossed simplicial categories,
// cyclic homology and representation homology.
//

#ifndef REPCHAR_EXACTLIN_RATIONAL_HPP_
#define REPCHAR_EXACTLIN_RATIONAL_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace repchar {

  using BigInt = boost::multiprecision::cpp_int;

  // Exact rational number, always stored in lowest terms with a positive
  // denominator.
  class Rational {
   public:
    Rational() : _num(0), _den(1) {}
    Rational(std::int64_t n) : _num(n), _den(1) {}  // NOLINT(runtime/explicit)
    Rational(BigInt n) : _num(std::move(n)), _den(1) {}  // NOLINT
    Rational(BigInt n, BigInt d);

    // Accepts "p", "-p" and "p/q".
    static Rational parse(std::string_view text);

    BigInt const& numerator() const noexcept {
      return _num;
    }
    BigInt const& denominator() const noexcept {
      return _den;
    }

    bool is_zero() const noexcept {
      return _num == 0;
    }
    bool is_integer() const noexcept {
      return _den == 1;
    }
    int sign() const noexcept {
      return _num.sign();
    }

    Rational operator-() const;
    Rational& operator+=(Rational const& other);
    Rational& operator-=(Rational const& other);
    Rational& operator*=(Rational const& other);
    Rational& operator/=(Rational const& other);

    friend Rational operator+(Rational a, Rational const& b) {
      return a += b;
    }
    friend Rational operator-(Rational a, Rational const& b) {
      return a -= b;
    }
    friend Rational operator*(Rational a, Rational const& b) {
      return a *= b;
    }
    friend Rational operator/(Rational a, Rational const& b) {
      return a /= b;
    }

    friend bool operator==(Rational const& a, Rational const& b) {
      return a._num == b._num && a._den == b._den;
    }
    friend bool operator!=(Rational const& a, Rational const& b) {
      return !(a == b);
    }
    friend bool operator<(Rational const& a, Rational const& b) {
      return a._num * b._den < b._num * a._den;
    }

    std::string to_string() const;

   private:
    void normalize();

    BigInt _num;
    BigInt _den;
  };

  std::ostream& operator<<(std::ostream& os, Rational const& q);

}  // namespace repchar

#endif  // REPCHAR_EXACTLIN_RATIONAL_HPP_
