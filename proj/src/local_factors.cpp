#include "spinor/local_factors.hpp"

#include <stdexcept>

#include "spinor/formulas.hpp"

namespace spinor {

namespace {

auto numeric_powers(long p) {
  return [p](int e) { return prime_power(p, e); };
}

}  // namespace

Rational prime_power(long p, int e) { return rpow(Rational(p), e); }

EulerFactor EulerFactor::make(long p, UniPoly poly, int degree_expected, std::string label) {
  if (poly[0] != 1) throw std::logic_error(label + ": constant term is not 1");
  if (poly.degree() > degree_expected) throw std::logic_error(label + ": degree exceeds nominal degree");
  return EulerFactor{Integer(p), std::move(poly), degree_expected, std::move(label)};
}

std::vector<Rational> EulerFactor::padded() const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_expected) + 1, Rational(0));
  for (int j = 0; j <= poly.degree(); ++j) out[j] = poly[j];
  return out;
}

std::vector<Integer> EulerFactor::padded_integers() const {
  std::vector<Integer> out;
  for (const auto& c : padded()) out.push_back(to_integer(c));
  return out;
}

EulerFactor hecke_local(const Integer& ap, int k, long p, int shift) {
  auto c = formulas::hecke(Rational(ap), k, shift, numeric_powers(p));
  return EulerFactor::make(p, UniPoly(std::move(c)), 2, "hecke");
}

EulerFactor rankin_local(const Integer& af, int k1, const Integer& ag, int k2, long p) {
  if (k1 % 2 != 0 || k2 % 2 != 0) throw std::invalid_argument("rankin_local: weights must be even");
  auto c = formulas::rankin(Rational(af), k1, Rational(ag), k2, numeric_powers(p));
  return EulerFactor::make(p, UniPoly(std::move(c)), 4, "rankin");
}

EulerFactor sym2_local(const Integer& ap, int k, long p) {
  auto c = formulas::sym2(Rational(ap), k, numeric_powers(p));
  return EulerFactor::make(p, UniPoly(std::move(c)), 3, "sym2");
}

SpinEigenvalueData miyawaki_spin_eigenvalues(const Integer& af, const Integer& ag, int kappa, long p) {
  const auto e = formulas::miyawaki(Rational(af), Rational(ag), kappa, numeric_powers(p));
  return SpinEigenvalueData{to_integer(e.lambda_p), to_integer(e.lambda_t1), to_integer(e.lambda_t2),
                            to_integer(e.lambda_t3), kappa, Integer(p)};
}

EulerFactor andrianov_q(const SpinEigenvalueData& eigs) {
  if (!eigs.prime.fits_slong_p()) throw std::invalid_argument("prime out of range");
  const long p = eigs.prime.get_si();
  const formulas::SpinEigenvalues<Rational> e{Rational(eigs.lambda_p), Rational(eigs.lambda_t1),
                                              Rational(eigs.lambda_t2), Rational(eigs.lambda_t3)};
  auto q = formulas::andrianov_q(formulas::andrianov_c(e, numeric_powers(p)));
  return EulerFactor::make(p, UniPoly(std::move(q)), 8, "andrianov");
}

EulerFactor spin_rhs(const Integer& af, const Integer& ag, int kappa, long p) {
  formulas::require_weight(kappa);
  UniPoly product = hecke_local(af, kappa, p, kappa - 2).poly * hecke_local(af, kappa, p, kappa - 3).poly *
                    rankin_local(af, kappa, ag, 2 * kappa - 4, p).poly;
  return EulerFactor::make(p, std::move(product), 8, "spin-product");
}

EulerFactor standard7_rhs(const Integer& af, const Integer& ag, int kappa, long p) {
  formulas::require_weight(kappa);
  const int kg = 2 * kappa - 4;
  UniPoly product = sym2_local(af, kappa, p).poly * hecke_local(ag, kg, p, -(kappa - 2)).poly *
                    hecke_local(ag, kg, p, -(kappa - 3)).poly;
  return EulerFactor::make(p, std::move(product), 7, "standard-product-literal");
}

EulerFactor standard7_rhs_normalized(const Integer& af, const Integer& ag, int kappa, long p) {
  formulas::require_weight(kappa);
  const int kg = 2 * kappa - 4;
  UniPoly product = sym2_local(af, kappa, p).poly.scale_variable(prime_power(p, 1 - kappa)) *
                    hecke_local(ag, kg, p, -(kappa - 2)).poly * hecke_local(ag, kg, p, -(kappa - 3)).poly;
  return EulerFactor::make(p, std::move(product), 7, "standard-product");
}

EulerFactor ikeda_standard_factor(const Integer& ag, int k, int m, long p) {
  if (m < 1) throw std::invalid_argument("ikeda_standard_factor: m must be >= 1");
  UniPoly product{1, -1};
  for (int j = 1; j <= 2 * m; ++j) product *= hecke_local(ag, 2 * k, p, -(k + m - j)).poly;
  return EulerFactor::make(p, std::move(product), 4 * m + 1, "ikeda-standard");
}

EulerFactor genus2_q(const Integer& lambda_p, const Integer& lambda_t2, int k, long p) {
  auto c = formulas::genus2(Rational(lambda_p), Rational(lambda_t2), numeric_powers(p));
  return EulerFactor::make(p, UniPoly(std::move(c)), 4, "genus2 weight " + std::to_string(k));
}

EulerFactor genus1_q(const Integer& lambda_p, const Integer& lambda_t1, long p) {
  std::vector<Rational> c{Rational(1), Rational(-lambda_p), Rational(p * lambda_t1)};
  return EulerFactor::make(p, UniPoly(std::move(c)), 2, "genus1");
}

}  // namespace spinor
