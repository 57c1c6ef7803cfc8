#include "svir/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace svir {

namespace {

bool fits_int64(const mpz_class& z) {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

mpz_class from_ll(long long v) { return mpz_class(std::to_string(v)); }

}  // namespace

Rational::Rational(long long num, long long den) : num_(from_ll(num)), den_(from_ll(den)) {
  normalize();
}

Rational::Rational(mpz_class num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::pair<std::int64_t, std::int64_t> Rational::to_int64() const {
  if (!fits_int64(num_) || !fits_int64(den_))
    throw std::overflow_error("Rational " + str() + " does not fit in 64-bit integers");
  return {std::stoll(num_.get_str()), std::stoll(den_.get_str())};
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rational::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor(), mpz_class(1)); }

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const mpz_class lhs = a.num_ * b.den_;
  const mpz_class rhs = b.num_ * a.den_;
  const int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace svir
