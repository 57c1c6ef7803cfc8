#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace svir {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in lowest terms with a strictly positive denominator, so two
/// equal values have identical representations.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long num) : num_(static_cast<long>(num)), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(long long num, long long den);
  Rational(mpz_class num, mpz_class den);

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  /// Numerator and denominator as 64-bit integers; throws std::overflow_error
  /// when either does not fit.
  std::pair<std::int64_t, std::int64_t> to_int64() const;

  double to_double() const;
  std::string str() const;

  bool is_integer() const { return den_ == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const;
  /// Representative of the value modulo 1 in [0, 1).
  Rational frac() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  mpz_class num_;
  mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace svir
