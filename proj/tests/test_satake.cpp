#include <gtest/gtest.h>

#include <random>

#include "spinor/formulas.hpp"
#include "spinor/satake.hpp"
#include "spinor/verify.hpp"

namespace spinor {
namespace {

const auto kPowers = [](int e) { return p_power(e); };

// e_k of the eight products over subsets of {a, b, c}, computed directly.
LaurentPoly subset_elementary(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c, int k) {
  std::vector<LaurentPoly> products;
  for (int mask = 0; mask < 8; ++mask) {
    LaurentPoly m(1L);
    if (mask & 1) m *= a;
    if (mask & 2) m *= b;
    if (mask & 4) m *= c;
    products.push_back(m);
  }
  std::vector<LaurentPoly> e(9);
  e[0] = LaurentPoly(1L);
  for (const auto& x : products)
    for (int j = 8; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

LaurentPoly random_monomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ex(-3, 3);
  std::uniform_int_distribution<long> c(-5, 5);
  long coeff = c(rng);
  if (coeff == 0) coeff = 1;
  return LaurentPoly::monomial(Rational(coeff), {ex(rng), ex(rng), ex(rng)});
}

class SymbolicSuite : public ::testing::TestWithParam<int> {};

TEST_P(SymbolicSuite, EveryIdentityHolds) {
  const int kappa = GetParam();
  const auto reports = run_identity_suite(kappa);
  EXPECT_EQ(reports.size(), 18u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.holds) << r.identity << " " << r.component << " " << r.difference.to_string();
    EXPECT_TRUE(r.difference.is_zero()) << r.identity;
    EXPECT_EQ(r.kappa, kappa) << r.identity;
  }
}

TEST_P(SymbolicSuite, SpinPolyShape) {
  const int kappa = GetParam();
  const auto a = SatakeAssignment::make(kappa);
  EXPECT_TRUE(a.satisfies_similitude());
  const XPoly spin = spin_poly_symbolic(a);
  ASSERT_EQ(spin.size(), 9u);
  EXPECT_EQ(spin[0], LaurentPoly(1L));
  EXPECT_EQ(spin[8], qvar(8 * (3 * kappa - 6)));
  EXPECT_EQ(spin[1], -(a.mu0 * (LaurentPoly(1L) + a.mu1) * (LaurentPoly(1L) + a.mu2) * (LaurentPoly(1L) + a.mu3)));
}

TEST_P(SymbolicSuite, T2SpecializesAtUnitParameters) {
  const int kappa = GetParam();
  const auto a = SatakeAssignment::make(kappa);
  const auto eig = formulas::miyawaki(symbolic_af(kappa), symbolic_ag(kappa), kappa, kPowers);
  const LaurentPoly lhs = a.mu0 * a.mu0 * t_poly(a.mu1, a.mu2, a.mu3);
  const LaurentPoly rhs = qvar(6) * s_poly(a.mu1, a.mu2, a.mu3) * (eig.lambda_t2 + qvar(2 * (3 * kappa - 12)));
  const Substitution unit = Substitution().set(Var::beta, LaurentPoly(1L)).set(Var::alpha, LaurentPoly(1L));
  const LaurentPoly l = lhs.substitute(unit);
  const LaurentPoly r = rhs.substitute(unit);
  EXPECT_EQ(l, r);
  EXPECT_EQ(l.max_exponent(Var::beta), 0);
  EXPECT_EQ(l.max_exponent(Var::alpha), 0);
}

TEST(TraceForm, ReproducesNumericSpin) {
  const int kappa = kF12Weight;
  const NewformTables tables = NewformTables::build(10);
  const TraceForm form = spin_trace_form(kappa);
  for (long p : {2L, 3L, 5L}) {
    const SpinReport r = verify_spin_at_prime(tables, p);
    const auto coeffs = form.evaluate(tables.delta[p], tables.g20[p], p);
    ASSERT_EQ(coeffs.size(), 9u);
    for (int m = 0; m <= 8; ++m) EXPECT_EQ(coeffs[m], Rational(r.lhs[m])) << "p=" << p << " m=" << m;
  }
}

INSTANTIATE_TEST_SUITE_P(Weights, SymbolicSuite, ::testing::Values(12, 14, 16, 20));

TEST(Satake, AssignmentValidation) {
  EXPECT_THROW(SatakeAssignment::make(13), std::invalid_argument);
  EXPECT_THROW(SatakeAssignment::make(10), std::invalid_argument);
  EXPECT_THROW(SatakeAssignment::make(12, 2), std::invalid_argument);
  EXPECT_TRUE(SatakeAssignment::make(12, -1).satisfies_similitude());
}

TEST(Satake, LambdaPExamples) {
  EXPECT_TRUE(check_lambda_p(12).holds);
  EXPECT_TRUE(check_lambda_p(14).holds);
  EXPECT_TRUE(check_lambda_p(12, -1).holds);
}

TEST(Satake, TheoremFactorizationMatchesLambdaAtX) {
  // The X coefficient of the factored side is -lambda(p) as in check_lambda_p.
  const int kappa = 12;
  const LaurentPoly af = symbolic_af(kappa);
  const LaurentPoly ag = symbolic_ag(kappa);
  XPoly rhs = formulas::hecke(af, kappa, kappa - 2, kPowers);
  rhs = xpoly_mul(rhs, formulas::hecke(af, kappa, kappa - 3, kPowers));
  rhs = xpoly_mul(rhs, formulas::rankin(af, kappa, ag, 2 * kappa - 4, kPowers));
  EXPECT_EQ(rhs[1], -(af * (ag + qvar(2 * kappa - 4) + qvar(2 * kappa - 6))));
  EXPECT_EQ(rhs[1], spin_poly_symbolic(SatakeAssignment::make(kappa))[1]);
}

TEST(SPoly, Examples) {
  const LaurentPoly zero;
  EXPECT_EQ(s_poly(zero, zero, zero), LaurentPoly(1L));
  EXPECT_TRUE(t_poly(zero, zero, zero).is_zero());
  const LaurentPoly a = beta(), b = alpha(), c = qvar();
  const LaurentPoly one(1L);
  EXPECT_EQ(s_poly(a, b, c), (one + a) * (one + b) * (one + c));
}

TEST(SPoly, MatchesSubsetSymmetricFunctions) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentPoly a = random_monomial(rng), b = random_monomial(rng), c = random_monomial(rng);
    EXPECT_EQ(s_poly(a, b, c), subset_elementary(a, b, c, 1));
    EXPECT_EQ(t_poly(a, b, c), subset_elementary(a, b, c, 3));
  }
  EXPECT_EQ(t_poly(beta(), alpha(), qvar()), subset_elementary(beta(), alpha(), qvar(), 3));
}

TEST(GFactor, Examples) {
  EXPECT_EQ(g_factor_reciprocal(1), LaurentPoly(1L));
  EXPECT_TRUE(check_g_factor(1, 10).holds);
  EXPECT_TRUE(check_g_factor(2, 10).holds);
  EXPECT_TRUE(check_g_factor(3, 9).holds);
  EXPECT_EQ(g_factor_reciprocal_factors(3).size(), 4u);
  EXPECT_EQ(g_factor_reciprocal_factors(1).size(), 0u);
  EXPECT_THROW(check_g_factor(0, 10), std::invalid_argument);
}

TEST(GFactor, ClearedSecondOrderIdentity) {
  // G^{(2)} (b + p^k + p^{k-1}) = p^k, checked as p^k / G = b + p^k + p^{k-1}.
  const int k = 10;
  const LaurentPoly b = qvar(2 * k - 1) * (alpha() + alpha(-1));
  EXPECT_EQ(p_power(k) * g_factor_reciprocal(2), b + qvar(2 * k) + qvar(2 * k - 2));
}

TEST(GFactor, DisplayedFormDiscrepancyIsReported) {
  for (int k : {10, 12}) {
    const auto r = check_g_factor(2, k);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.note, "displayed closed form equals the expansion times p^" + std::to_string(-2 * k));
  }
}

TEST(WittTransfer, Ranges) {
  for (int m : {1, 2, 3}) EXPECT_TRUE(check_witt_transfer(m, 12).holds) << m;
  EXPECT_THROW(check_witt_transfer(4, 12), std::invalid_argument);
}

TEST(Degenerate, OddCoefficientsVanishAndSignIsIrrelevant) {
  const int kappa = 12;
  const Substitution at_i = Substitution().set(Var::beta, LaurentPoly(GaussianRational::i()));
  const XPoly plus = xpoly_substitute(spin_poly_symbolic(SatakeAssignment::make(kappa, 1, ScalarMode::gaussian)), at_i);
  const XPoly minus =
      xpoly_substitute(spin_poly_symbolic(SatakeAssignment::make(kappa, -1, ScalarMode::gaussian)), at_i);
  ASSERT_EQ(plus.size(), 9u);
  for (int m = 1; m < 9; m += 2) EXPECT_TRUE(plus[m].is_zero()) << m;
  EXPECT_EQ(plus, minus);
  EXPECT_TRUE(symbolic_af(kappa).substitute(at_i).is_zero());
  EXPECT_TRUE(check_degenerate_case(kappa).holds);
}

TEST(Reports, FailureNamesOffendingMonomial) {
  const auto r = compare_laurent("demo", 12, beta(2) + qvar(3), beta(2), "X^1");
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.component, "X^1");
  const auto m = r.offending_monomial();
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->first, (Exponent{0, 0, 3}));
  EXPECT_EQ(m->second, GaussianRational(1));
  EXPECT_FALSE(compare_laurent("ok", 12, beta(), beta()).offending_monomial().has_value());

  const auto x = compare_xpoly("demo", 12, XPoly{LaurentPoly(1L), beta()}, XPoly{LaurentPoly(1L)});
  EXPECT_FALSE(x.holds);
  EXPECT_EQ(x.component, "X^1");
}

TEST(TracePowers, RewritesSymmetricPolynomials) {
  // b^2 + b^-2 = s^2 - 2
  const auto t = to_trace_powers(beta(2) + beta(-2), Var::beta);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].first, 2);
  EXPECT_EQ(t[0].second, LaurentPoly(1L));
  EXPECT_EQ(t[1].first, 0);
  EXPECT_EQ(t[1].second, LaurentPoly(-2L));
  EXPECT_THROW(to_trace_powers(beta(), Var::beta), std::domain_error);
}

TEST(TraceForm, RejectsAsymmetricInput) {
  EXPECT_THROW(TraceForm::from(XPoly{LaurentPoly(1L), beta()}, 12), std::domain_error);
}

TEST(TraceForm, StandardFormMatchesNumericRoute) {
  const NewformTables tables = NewformTables::build(10);
  const TraceForm form = standard_trace_form(12);
  for (long p : {2L, 3L, 5L, 7L}) {
    const StandardReport r = verify_standard_at_prime(tables, p, form);
    EXPECT_TRUE(r.equal) << p;
  }
}

}  // namespace
}  // namespace spinor
