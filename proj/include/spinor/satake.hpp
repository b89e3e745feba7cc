#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinor/exact.hpp"
#include "spinor/laurent.hpp"

namespace spinor {

/// Polynomial in X with Laurent coefficients, constant term first, no
/// trailing zeros.
using XPoly = std::vector<LaurentPoly>;

XPoly xpoly_mul(const XPoly& a, const XPoly& b);
XPoly xpoly_trim(XPoly a);
/// prod (1 - r X) over the given roots.
XPoly xpoly_from_eigenvalues(const std::vector<LaurentPoly>& eigenvalues);
/// X -> c X.
XPoly xpoly_scale_variable(const XPoly& a, const LaurentPoly& c);
XPoly xpoly_substitute(const XPoly& a, const Substitution& s);

/// p^e as the monomial q^{2e}.
LaurentPoly p_power(int e);

/// a_f = q^{kappa-1} (b + 1/b), the eigenvalue of f in S_kappa.
LaurentPoly symbolic_af(int kappa);
/// a_g = q^{2 kappa-5} (a + 1/a), the eigenvalue of g in S_{2 kappa-4}.
LaurentPoly symbolic_ag(int kappa);

/// Satake parameters of a degree-3 Miyawaki lift: mu1 = b^2, mu2 = a q,
/// mu3 = q / a, mu0 = eps q^{3 kappa-7} / b.
struct SatakeAssignment {
  int kappa = 0;
  int epsilon = 1;
  LaurentPoly mu0;
  LaurentPoly mu1;
  LaurentPoly mu2;
  LaurentPoly mu3;

  /// Throws std::invalid_argument for odd or small kappa, or eps != +-1.
  static SatakeAssignment make(int kappa, int epsilon = 1, ScalarMode mode = ScalarMode::rational);

  /// mu0^2 mu1 mu2 mu3 == p^{3 kappa - 6}.
  bool satisfies_similitude() const;
};

/// The eight products mu0 * prod_{i in I} mu_i, I running over subsets of
/// {1,2,3} in the order {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
std::vector<LaurentPoly> spin_eigenvalues(const SatakeAssignment& a);

XPoly spin_poly_symbolic(const SatakeAssignment& a);

/// (1 - X) prod_i (1 - mu_i X)(1 - X / mu_i), unit-scale normalization.
XPoly standard_poly_symbolic(const SatakeAssignment& a);

LaurentPoly s_poly(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c);
LaurentPoly t_poly(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c);

/// 1 / G^{(m)}: the product over 1 <= i <= m-1 of
/// (1 + a q^{1-2i})(1 + q^{1-2i} / a). G itself is not a Laurent
/// polynomial for m >= 2, so identities are checked in cleared form.
LaurentPoly g_factor_reciprocal(int m);
/// The 2(m-1) linear factors of g_factor_reciprocal(m).
std::vector<LaurentPoly> g_factor_reciprocal_factors(int m);

struct SymbolicIdentityReport {
  std::string identity;
  int kappa = 0;
  /// First nonvanishing component of lhs - rhs (zero when the identity holds).
  LaurentPoly difference;
  /// Which component the difference belongs to, e.g. "X^4".
  std::string component;
  bool holds = true;
  std::string note;

  std::optional<std::pair<Exponent, GaussianRational>> offending_monomial() const;
};

SymbolicIdentityReport compare_laurent(std::string identity, int kappa, const LaurentPoly& lhs,
                                       const LaurentPoly& rhs, std::string component = "");
SymbolicIdentityReport compare_xpoly(std::string identity, int kappa, const XPoly& lhs, const XPoly& rhs);

SymbolicIdentityReport check_lambda_p(int kappa, int epsilon = 1);
SymbolicIdentityReport check_T2_identity(int kappa);
SymbolicIdentityReport check_all_c_coefficients(int kappa);
SymbolicIdentityReport check_theorem_factorization(int kappa);
SymbolicIdentityReport check_g_factor(int m, int k);
SymbolicIdentityReport check_witt_transfer(int m, int kappa);
SymbolicIdentityReport check_degenerate_case(int kappa);
/// sym2 in arithmetic normalization equals the unit-scale factor with
/// X -> p^{kappa-1} X.
SymbolicIdentityReport check_standard_renormalization(int kappa);
/// Unit-scale standard factor from the Satake parameters equals the
/// renormalized sym2(f) L(s+kappa-2, g) L(s+kappa-3, g).
SymbolicIdentityReport check_standard_factorization(int kappa);
/// Rankin closed form vs the tensor-product determinant.
SymbolicIdentityReport check_rankin_closed_form(int kappa);
/// sym2 closed form vs its eigenvalue product.
SymbolicIdentityReport check_sym2_closed_form(int kappa);
SymbolicIdentityReport check_spin_palindrome(int kappa);
SymbolicIdentityReport check_weyl_invariance(int kappa);

/// Every check above for one weight, in a fixed order.
std::vector<SymbolicIdentityReport> run_identity_suite(int kappa);

/// Rewrites a polynomial in X whose coefficients are symmetric under
/// b -> 1/b and a -> 1/a as a polynomial in the traces s = b + 1/b and
/// t = a + 1/a, so that it can be evaluated at a prime from the integer
/// eigenvalues a_f = q^{kappa-1} s and a_g = q^{2 kappa-5} t.
class TraceForm {
 public:
  struct Term {
    int s_power;
    int t_power;
    int q_power;
    Rational coeff;
  };

  /// Throws std::domain_error if a coefficient is not symmetric or not real.
  static TraceForm from(const XPoly& poly, int kappa);

  int kappa() const { return kappa_; }
  const std::vector<std::vector<Term>>& terms() const { return terms_; }

  /// Exact coefficients at p. Throws std::domain_error if a half-integral
  /// power of p survives.
  std::vector<Rational> evaluate(const Integer& af, const Integer& ag, long p) const;

 private:
  int kappa_ = 0;
  std::vector<std::vector<Term>> terms_;
};

/// Writes poly as sum_j C_j (v + 1/v)^j with every C_j free of v; returns
/// the pairs (j, C_j) by decreasing j. Throws std::domain_error if poly is
/// not symmetric under v -> 1/v.
std::vector<std::pair<int, LaurentPoly>> to_trace_powers(const LaurentPoly& poly, Var v);

}  // namespace spinor
