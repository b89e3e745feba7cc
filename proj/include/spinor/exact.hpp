#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace spinor {

// Integers and rationals are GMP values. mpq_class keeps results of its
// arithmetic canonical (lowest terms, positive denominator); values built
// from a raw numerator/denominator pair must go through make_rational().
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

bool is_integer(const Rational& x);

// Throws std::domain_error when x has a nontrivial denominator.
Integer to_integer(const Rational& x);

Integer ipow(const Integer& base, unsigned long exponent);

// base^exponent for any sign of exponent; base must be nonzero when
// exponent < 0.
Rational rpow(const Rational& base, long exponent);

std::optional<std::int64_t> to_int64(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

/// Element of Q(i): real + imag * i.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : real_(value) {}  // NOLINT(implicit)
  GaussianRational(Rational real) : real_(std::move(real)) {}  // NOLINT(implicit)
  GaussianRational(Rational real, Rational imag)
      : real_(std::move(real)), imag_(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return real_; }
  const Rational& imag() const { return imag_; }

  bool is_zero() const { return sgn(real_) == 0 && sgn(imag_) == 0; }
  bool is_real() const { return sgn(imag_) == 0; }

  GaussianRational conj() const { return {real_, -imag_}; }
  /// real^2 + imag^2, always >= 0.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-real_, -imag_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.real_ == b.real_ && a.imag_ == b.imag_;
  }

  std::string to_string() const;

 private:
  Rational real_{0};
  Rational imag_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace spinor
