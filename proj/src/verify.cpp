#include "spinor/verify.hpp"

#include <stdexcept>

namespace spinor {

namespace {

constexpr int kG20Weight = 20;

std::vector<Integer> arithmetic_scale(const std::vector<Rational>& unit, long p, int kappa) {
  UniPoly poly(unit);
  return poly.scale_variable(prime_power(p, kappa - 1)).integer_coeffs();
}

std::vector<Rational> pad(std::vector<Rational> v, std::size_t n) {
  v.resize(std::max(v.size(), n), Rational(0));
  return v;
}

}  // namespace

NewformTables NewformTables::build(int length) { return NewformTables{delta_qexp(length), g20_qexp(length)}; }

void NewformTables::require(long n) const {
  if (n > length()) throw std::invalid_argument("insufficient q-expansion length");
}

SpinReport verify_spin_at_prime(const NewformTables& tables, long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  tables.require(p);
  SpinReport r;
  r.prime = p;
  r.a_f = tables.delta[p];
  r.a_g = tables.g20[p];
  r.eigenvalues = miyawaki_spin_eigenvalues(r.a_f, r.a_g, kF12Weight, p);
  r.lhs = andrianov_q(r.eigenvalues).padded_integers();
  r.rhs = spin_rhs(r.a_f, r.a_g, kF12Weight, p).padded_integers();
  r.equal = r.lhs == r.rhs;
  return r;
}

TraceForm standard_trace_form(int kappa) {
  return TraceForm::from(standard_poly_symbolic(SatakeAssignment::make(kappa)), kappa);
}

TraceForm spin_trace_form(int kappa) {
  return TraceForm::from(spin_poly_symbolic(SatakeAssignment::make(kappa)), kappa);
}

StandardReport verify_standard_at_prime(const NewformTables& tables, long p, const TraceForm& standard_form) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (standard_form.kappa() != kF12Weight) throw std::invalid_argument("standard form must have weight 12");
  tables.require(p);
  StandardReport r;
  r.prime = p;
  r.a_f = tables.delta[p];
  r.a_g = tables.g20[p];
  r.lhs = pad(standard_form.evaluate(r.a_f, r.a_g, p), 8);
  r.rhs = standard7_rhs_normalized(r.a_f, r.a_g, kF12Weight, p).padded();
  r.lhs_arithmetic = arithmetic_scale(r.lhs, p, kF12Weight);
  r.rhs_arithmetic = arithmetic_scale(r.rhs, p, kF12Weight);
  r.equal = r.lhs == r.rhs;
  r.literal_equal = r.lhs == standard7_rhs(r.a_f, r.a_g, kF12Weight, p).padded();
  return r;
}

StandardReport verify_standard_at_prime(const NewformTables& tables, long p) {
  return verify_standard_at_prime(tables, p, standard_trace_form(kF12Weight));
}

bool nonvanishing_inequality(long p, int k2) {
  const Integer lhs = ipow(ipow(Integer(p), static_cast<unsigned long>(k2 / 2 - 1)) * (p + 1), 2);
  const Integer rhs = 4 * ipow(Integer(p), static_cast<unsigned long>(k2 - 1));
  return lhs > rhs;
}

bool nonvanishing_check(const NewformTables& tables, long p) {
  tables.require(p);
  if (!nonvanishing_inequality(p, kG20Weight)) return false;
  const Integer& af = tables.delta[p];
  const auto eig = miyawaki_spin_eigenvalues(af, tables.g20[p], kF12Weight, p);
  return (sgn(eig.lambda_p) == 0) == (sgn(af) == 0);
}

}  // namespace spinor
