#include <gtest/gtest.h>

#include "spinor/local_factors.hpp"
#include "spinor/qexp.hpp"
#include "spinor/verify.hpp"

namespace spinor {
namespace {

const NewformTables& tables() {
  static const NewformTables t = NewformTables::build(1000);
  return t;
}

std::vector<Integer> ints(std::initializer_list<const char*> digits) {
  std::vector<Integer> out;
  for (const char* d : digits) out.emplace_back(d);
  return out;
}

Integer pw(long p, unsigned long e) { return ipow(Integer(p), e); }

// Power series of 1/poly, truncated after X^order.
std::vector<Rational> inverse_series(const UniPoly& poly, int order) { return poly.reciprocal_series(order); }

TEST(Hecke, Examples) {
  EXPECT_EQ(hecke_local(0, 12, 2).poly, (UniPoly{1, 0, 2048}));
  EXPECT_EQ(hecke_local(-24, 12, 2).poly, (UniPoly{1, 24, 2048}));
  const EulerFactor shifted = hecke_local(-24, 12, 2, 9);
  EXPECT_EQ(shifted.poly[1], 12288);
  EXPECT_EQ(shifted.poly[2], Rational(pw(2, 29)));
  EXPECT_EQ(shifted.degree_expected, 2);
}

TEST(Hecke, SeriesMatchesCoefficients) {
  // 1/(1 - a(p)X + p^{k-1}X^2) = sum a(p^n) X^n
  for (long p : {2L, 3L, 5L}) {
    const auto s = inverse_series(hecke_local(tables().delta[p], 12, p).poly, 4);
    long pn = 1;
    for (int n = 0; n <= 4; ++n, pn *= p) EXPECT_EQ(s[n], Rational(tables().delta[pn])) << p << "^" << n;
  }
}

TEST(Rankin, Examples) {
  const EulerFactor r = rankin_local(-24, 12, 456, 20, 2);
  EXPECT_EQ(r.poly[1], 10944);
  EXPECT_EQ(r.poly.degree(), 4);
  const EulerFactor z = rankin_local(0, 12, 456, 20, 2);
  EXPECT_EQ(z.poly[1], 0);
  EXPECT_EQ(z.poly[3], 0);
  EXPECT_EQ(z.poly[2], Rational(Integer(456) * 456 * pw(2, 11) - 2 * pw(2, 30)));
  EXPECT_EQ(z.poly[4], Rational(pw(2, 60)));
}

TEST(Rankin, DirichletSeriesOracle) {
  // sum a_f(p^n) a_g(p^n) X^n = (1 - p^{k1+k2-2} X^2) / L_p(f x g, X)
  for (long p : {2L, 3L, 5L, 7L}) {
    const auto& d = tables().delta;
    const auto& g = tables().g20;
    const auto inv = inverse_series(rankin_local(d[p], 12, g[p], 20, p).poly, 4);
    const UniPoly numerator({Rational(1), Rational(0), Rational(-pw(p, 30))});
    const UniPoly lhs = numerator * UniPoly(inv);
    long pn = 1;
    for (int n = 0; n <= 4 && pn <= 1000; ++n, pn *= p)
      EXPECT_EQ(lhs[n], Rational(d[pn] * g[pn])) << "p=" << p << " n=" << n;
  }
}

TEST(Sym2, Examples) {
  EXPECT_EQ(sym2_local(0, 12, 2).poly, UniPoly::from_integers(std::vector<Integer>{1, 2048, -pw(2, 22), -pw(2, 33)}));
  EXPECT_EQ(sym2_local(-24, 12, 2).poly[1], 1472);
}

TEST(Sym2, DirichletSeriesOracle) {
  // sum a(p^{2n}) X^n = (1 - p^{2k-2} X^2) / L_p(sym^2 f, X)
  for (long p : {2L, 3L, 5L}) {
    for (const QSeries* s : {&tables().delta, &tables().g20}) {
      const int k = s->weight;
      const auto inv = inverse_series(sym2_local((*s)[p], k, p).poly, 3);
      const UniPoly lhs = UniPoly({Rational(1), Rational(0), Rational(-pw(p, 2 * k - 2))}) * UniPoly(inv);
      long p2n = 1;
      for (int n = 0; n <= 3 && p2n <= 1000; ++n, p2n *= p * p)
        EXPECT_EQ(lhs[n], Rational((*s)[p2n])) << "p=" << p << " k=" << k << " n=" << n;
    }
  }
}

TEST(Miyawaki, EigenvaluesAtTwo) {
  const auto e = miyawaki_spin_eigenvalues(-24, 456, 12, 2);
  EXPECT_EQ(e.lambda_p, -47808);
  EXPECT_EQ(e.lambda_p, Integer(-24) * (456 + 1024 + 512));
  EXPECT_EQ(e.lambda_t1, Integer("235339776"));
  EXPECT_EQ(e.lambda_t2, 66060288);
  EXPECT_EQ(e.lambda_t2, Integer(576) * pw(2, 16) + Integer(456) * pw(2, 17) * 3 - pw(2, 24) * 9);
  EXPECT_EQ(e.lambda_t3, pw(2, 24));
}

TEST(Miyawaki, EigenvaluesAtThree) {
  const auto f = miyawaki_spin_eigenvalues(tables().delta[3], tables().g20[3], 12, 3);
  EXPECT_EQ(f.lambda_p, Integer("32604768"));
  EXPECT_EQ(f.lambda_t1, Integer("138479464796904"));
  EXPECT_EQ(f.lambda_t2, Integer("20990442094020"));
  EXPECT_EQ(f.lambda_t3, Integer("282429536481"));
}

TEST(Andrianov, CoefficientExamples) {
  const auto e = miyawaki_spin_eigenvalues(-24, 456, 12, 2);
  const EulerFactor q = andrianov_q(e);
  EXPECT_EQ(q.poly[0], 1);
  EXPECT_EQ(q.poly[8], Rational(pw(2, 120)));
  // X^7 carries -c(7) = -p^90 lambda(p)
  EXPECT_EQ(q.poly[7], Rational(-pw(2, 90) * e.lambda_p));
  EXPECT_EQ(q.poly[1], Rational(-e.lambda_p));
}

TEST(SpinRhs, Examples) {
  const EulerFactor r = spin_rhs(-24, 456, 12, 2);
  EXPECT_EQ(r.poly[0], 1);
  EXPECT_EQ(r.poly[1], 47808);
  EXPECT_EQ(r.poly.degree(), 8);
}

TEST(VerifySpin, FrozenVectorAtTwo) {
  const auto expected = ints({"1", "47808", "1970143232", "31682363129856", "-1067313529268207616",
                              "34018678375681930297344", "2271420499328436390626066432",
                              "59183437398155460182377330900992", "1329227995784915872903807060280344576"});
  const SpinReport r = verify_spin_at_prime(tables(), 2);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, expected);
  EXPECT_EQ(r.rhs, expected);
  EXPECT_EQ(r.a_f, -24);
  EXPECT_EQ(r.a_g, 456);
}

TEST(VerifySpin, FrozenVectorAtThree) {
  const auto expected = ints({"1", "-32604768", "1129880518155612", "-18727120193569204376736",
                              "277633381815631979736287767974", "-3855747977526525808666661130205685664",
                              "47896943877217843510247358450928663457274012",
                              "-284573227249952067296906208014123456321308555028832",
                              "1797010299914431210413179829509605039731475627537851106401"});
  const SpinReport r = verify_spin_at_prime(tables(), 3);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, expected);
  EXPECT_EQ(r.rhs, expected);
}

TEST(VerifySpin, NinetySeven) { EXPECT_TRUE(verify_spin_at_prime(tables(), 97).equal); }

TEST(VerifySpin, Errors) {
  EXPECT_THROW(verify_spin_at_prime(tables(), 4), std::invalid_argument);
  const NewformTables short_tables = NewformTables::build(50);
  EXPECT_THROW(verify_spin_at_prime(short_tables, 53), std::invalid_argument);
}

TEST(VerifySpin, NumericPalindrome) {
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    const SpinReport r = verify_spin_at_prime(tables(), p);
    for (int m = 0; m <= 8; ++m) {
      const long e = 30L * (4 - m);
      const Integer& hi = r.lhs[8 - m];
      const Integer& lo = r.lhs[m];
      if (e >= 0)
        EXPECT_EQ(hi, pw(p, e) * lo) << "p=" << p << " m=" << m;
      else
        EXPECT_EQ(lo, pw(p, -e) * hi) << "p=" << p << " m=" << m;
    }
  }
}

TEST(Genus1, MatchesHeckeFactor) {
  // T_1(p^2) acts on a genus-one eigenform by p^{k-2}.
  for (long p : {2L, 3L, 5L}) {
    const Integer ap = tables().delta[p];
    EXPECT_EQ(genus1_q(ap, pw(p, 10), p).poly, hecke_local(ap, 12, p).poly);
  }
}

TEST(Genus2, Literal) {
  EXPECT_EQ(genus2_q(0, 0, 20, 2).poly, UniPoly{1});
  const EulerFactor g = genus2_q(3, 5, 20, 2);
  EXPECT_EQ(g.poly[0], 1);
  EXPECT_EQ(g.poly[1], -3);
  EXPECT_EQ(g.poly[2], 9 + 2 * 5 * 5);
  EXPECT_EQ(g.poly[3], -8 * 3 * 5);
  EXPECT_EQ(g.poly[4], 64 * 25);
  EXPECT_EQ(g.degree_expected, 4);
}

TEST(Ikeda, DegreeAndSymmetry) {
  const Integer ag = tables().g20[2];
  for (int m : {1, 2, 3}) {
    const EulerFactor f = ikeda_standard_factor(ag, 10, m, 2);
    EXPECT_EQ(f.poly.degree(), 4 * m + 1);
    EXPECT_EQ(f.poly[0], 1);
    // The zeta factor is anti-palindromic, the paired shifts are palindromic.
    const int d = 4 * m + 1;
    for (int i = 0; i <= d; ++i) EXPECT_EQ(f.poly[d - i], -f.poly[i]) << "m=" << m << " i=" << i;
  }
  EXPECT_THROW(ikeda_standard_factor(ag, 10, 0, 2), std::invalid_argument);
}

TEST(Standard, RhsShape) {
  const EulerFactor r = standard7_rhs_normalized(-24, 456, 12, 2);
  EXPECT_EQ(r.poly.degree(), 7);
  EXPECT_EQ(r.poly[0], 1);
}

TEST(Standard, VerifyAtSmallPrimes) {
  for (long p : {2L, 3L, 97L}) {
    const StandardReport r = verify_standard_at_prime(tables(), p);
    EXPECT_TRUE(r.equal) << p;
    EXPECT_EQ(r.lhs.size(), 8u);
    EXPECT_EQ(r.lhs[0], 1);
    EXPECT_EQ(r.rhs[0], 1);
    EXPECT_EQ(r.lhs_arithmetic, r.rhs_arithmetic);
    // The literal mixed product keeps the elliptic factor at arithmetic scale.
    EXPECT_FALSE(r.literal_equal) << p;
  }
}

TEST(Nonvanishing, SmallPrimes) {
  EXPECT_TRUE(nonvanishing_check(tables(), 2));
  EXPECT_NE(miyawaki_spin_eigenvalues(tables().delta[2], tables().g20[2], 12, 2).lambda_p, 0);
  for (long p : primes_up_to(541)) EXPECT_TRUE(nonvanishing_inequality(p, 20)) << p;
}

TEST(Nonvanishing, VanishingTauForcesVanishingLambda) {
  const auto e = miyawaki_spin_eigenvalues(0, 456, 12, 2);
  EXPECT_EQ(e.lambda_p, 0);
}

TEST(EulerFactorMake, Invariants) {
  EXPECT_THROW(EulerFactor::make(2, UniPoly{2, 1}, 1, "bad"), std::logic_error);
  EXPECT_THROW(EulerFactor::make(2, UniPoly{1, 1, 1}, 1, "bad"), std::logic_error);
  const EulerFactor f = EulerFactor::make(2, UniPoly{1}, 3, "short");
  EXPECT_EQ(f.padded().size(), 4u);
  EXPECT_EQ(f.padded_integers(), (std::vector<Integer>{1, 0, 0, 0}));
}

}  // namespace
}  // namespace spinor
