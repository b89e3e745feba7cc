#pragma once

#include <string>
#include <vector>

#include "spinor/exact.hpp"
#include "spinor/unipoly.hpp"

namespace spinor {

/// Reciprocal local L-factor at a prime, as a polynomial in X = p^{-s}.
/// The constant term is always 1 and the degree never exceeds the nominal
/// degree (it can be smaller when leading eigenvalue data vanish).
struct EulerFactor {
  Integer prime;
  UniPoly poly;
  int degree_expected = 0;
  std::string label;

  /// Validates the invariants above; throws std::logic_error otherwise.
  static EulerFactor make(long p, UniPoly poly, int degree_expected, std::string label);

  /// Coefficients padded with zeros to degree_expected + 1 entries.
  std::vector<Rational> padded() const;
  std::vector<Integer> padded_integers() const;
};

/// lambda(p), lambda(T_1(p^2)), lambda(T_2(p^2)), lambda(T_3(p^2)) of a
/// degree-3 eigenform of weight kappa.
struct SpinEigenvalueData {
  Integer lambda_p;
  Integer lambda_t1;
  Integer lambda_t2;
  Integer lambda_t3;
  int kappa = 0;
  Integer prime;
};

// p^e as an exact rational, any sign of e.
Rational prime_power(long p, int e);

/// 1 - a_p p^shift X + p^{k-1+2 shift} X^2, i.e. the factor of
/// L(s - shift, h).
EulerFactor hecke_local(const Integer& ap, int k, long p, int shift = 0);

EulerFactor rankin_local(const Integer& af, int k1, const Integer& ag, int k2, long p);

EulerFactor sym2_local(const Integer& ap, int k, long p);

SpinEigenvalueData miyawaki_spin_eigenvalues(const Integer& af, const Integer& ag, int kappa, long p);

/// Degree-8 genus-3 denominator polynomial from the eigenvalues.
EulerFactor andrianov_q(const SpinEigenvalueData& eigs);

/// L(s-kappa+2, f) L(s-kappa+3, f) L(s, f x g), reciprocal, degree 8.
EulerFactor spin_rhs(const Integer& af, const Integer& ag, int kappa, long p);

/// sym2(f) * L(s+kappa-2, g) * L(s+kappa-3, g) as literally written: the
/// sym2 part carries eigenvalue scale p^{kappa-1}, the g parts scale 1.
EulerFactor standard7_rhs(const Integer& af, const Integer& ag, int kappa, long p);

/// Same product with the sym2 part moved to unit scale (X -> p^{1-kappa} X),
/// so every eigenvalue lives in the unitary normalization.
EulerFactor standard7_rhs_normalized(const Integer& af, const Integer& ag, int kappa, long p);

/// (1 - X) prod_{j=1}^{2m} L(s + k + m - j, g) for g of weight 2k;
/// degree 4m + 1.
EulerFactor ikeda_standard_factor(const Integer& ag, int k, int m, long p);

/// Genus-2 Q_p from lambda(p), lambda(T_2(p^2)).
EulerFactor genus2_q(const Integer& lambda_p, const Integer& lambda_t2, int k, long p);

/// 1 - T(p) X + p T_1(p^2) X^2 for an elliptic eigenform.
EulerFactor genus1_q(const Integer& lambda_p, const Integer& lambda_t1, long p);

}  // namespace spinor
