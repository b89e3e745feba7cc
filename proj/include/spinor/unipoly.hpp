#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "spinor/exact.hpp"

namespace spinor {

/// Dense univariate polynomial over Q in the variable X, constant term
/// first. Trailing zeros are never stored, so the zero polynomial has an
/// empty coefficient list and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly from_integers(std::span<const Integer> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of X^j (zero past the degree).
  Rational operator[](int j) const;

  bool is_integral() const;
  /// Throws std::domain_error if some coefficient is not an integer.
  std::vector<Integer> integer_coeffs() const;

  /// X -> c X: multiplies the coefficient of X^j by c^j.
  UniPoly scale_variable(const Rational& c) const;

  /// Power series 1/poly, truncated after X^order.
  std::vector<Rational> reciprocal_series(int order) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly unipoly_mul(const UniPoly& a, const UniPoly& b);
UniPoly unipoly_scale_variable(const UniPoly& a, const Rational& c);

}  // namespace spinor
