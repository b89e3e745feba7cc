#pragma once

// Closed-form local data, written once over a generic coefficient ring R.
// The numeric pipeline instantiates R = Rational with pp(e) = p^e; the
// symbolic checks instantiate R = LaurentPoly with pp(e) = q^{2e}.
//
// All coefficient lists describe reciprocal local factors in X = p^{-s},
// constant term first.

#include <array>
#include <stdexcept>
#include <vector>

namespace spinor::formulas {

/// Reciprocal of L_p(s - shift, h) for h of weight k with eigenvalue ap.
template <class R, class PowP>
std::vector<R> hecke(const R& ap, int k, int shift, PowP&& pp) {
  return {R(1), R(-(ap * pp(shift))), R(pp(k - 1 + 2 * shift))};
}

/// Degree-4 Rankin factor of f (weight k1) and g (weight k2).
template <class R, class PowP>
std::vector<R> rankin(const R& af, int k1, const R& ag, int k2, PowP&& pp) {
  const int w = k1 + k2 - 2;
  const R product = af * ag;
  return {R(1), R(-product), R(af * af * pp(k2 - 1) + ag * ag * pp(k1 - 1) - R(2) * pp(w)), R(-(product * pp(w))),
          R(pp(2 * w))};
}

/// Degree-3 factor of the elliptic standard (symmetric square) L-function,
/// arithmetic normalization: eigenvalues p^{k-1} * {beta^2, 1, beta^-2}.
template <class R, class PowP>
std::vector<R> sym2(const R& ap, int k, PowP&& pp) {
  const R trace = ap * ap - pp(k - 1);
  return {R(1), R(-trace), R(pp(k - 1) * trace), R(-pp(3 * (k - 1)))};
}

/// The literal genus-2 Q_p display, transcribed as printed.
template <class R, class PowP>
std::vector<R> genus2(const R& lambda_p, const R& lambda_t2, PowP&& pp) {
  const R p = pp(1);
  return {R(1), R(-lambda_p), R(lambda_p * lambda_p + p * (pp(2) + R(1)) * lambda_t2),
          R(-(pp(3) * lambda_p * lambda_t2)), R(pp(6) * lambda_t2 * lambda_t2)};
}

template <class R>
struct SpinEigenvalues {
  R lambda_p;
  R lambda_t1;
  R lambda_t2;
  R lambda_t3;
};

inline void require_weight(int kappa) {
  if (kappa < 12 || kappa % 2 != 0) throw std::invalid_argument("weight must be even and >= 12");
}

/// Hecke eigenvalues of a degree-3 Miyawaki lift of weight kappa attached
/// to f of weight kappa and g of weight 2 kappa - 4.
template <class R, class PowP>
SpinEigenvalues<R> miyawaki(const R& af, const R& ag, int kappa, PowP&& pp) {
  require_weight(kappa);
  const int k1 = kappa;
  const int k2 = 2 * kappa - 4;
  const R p = pp(1);
  const R one(1);
  const R af2 = af * af;
  SpinEigenvalues<R> out;
  out.lambda_p = af * (ag + pp(k2 / 2) + pp(k2 / 2 - 1));
  out.lambda_t3 = pp(3 * kappa - 12);
  out.lambda_t2 = af2 * pp(k2 - 4) + ag * pp(k1 + k2 / 2 - 5) * (p + one) - pp(3 * kappa - 12) * (pp(3) + one);
  out.lambda_t1 = af2 * ag * pp(k2 / 2 - 2) * (p + one) + af2 * pp(k2 - 4) * (pp(2) - one) + ag * ag * pp(k1 - 2) -
                  ag * pp(k1 + k2 / 2 - 5) * (pp(2) + one) * (p + one) +
                  pp(3 * kappa - 10) * (pp(3) + one) * (p - one);
  return out;
}

/// c(0..8) of the genus-3 denominator Q_p(X) = sum (-1)^m c(m) X^m, with
/// the Hecke operators replaced by eigenvalues.
template <class R, class PowP>
std::array<R, 9> andrianov_c(const SpinEigenvalues<R>& e, PowP&& pp) {
  const R one(1);
  const R p = pp(1);
  const R p2p1 = pp(2) + one;
  const R& t = e.lambda_t3;
  std::array<R, 9> c;
  c[0] = one;
  c[1] = e.lambda_p;
  c[2] = p * (e.lambda_t1 + p2p1 * e.lambda_t2 + p2p1 * p2p1 * t);
  c[3] = pp(3) * e.lambda_p * (e.lambda_t2 + t);
  c[4] = pp(6) * (e.lambda_p * e.lambda_p * t + e.lambda_t2 * e.lambda_t2 - R(2) * p * e.lambda_t1 * t -
                  R(2) * (p - one) * e.lambda_t2 * t -
                  (pp(6) + R(2) * pp(5) + R(2) * pp(3) + R(2) * p - one) * t * t);
  c[5] = pp(6) * t * c[3];
  c[6] = pp(12) * t * t * c[2];
  c[7] = pp(18) * t * t * t * c[1];
  c[8] = pp(24) * t * t * t * t;
  return c;
}

template <class R>
std::vector<R> andrianov_q(const std::array<R, 9>& c) {
  std::vector<R> out(c.begin(), c.end());
  for (std::size_t m = 1; m < out.size(); m += 2) out[m] = R(-out[m]);
  return out;
}

}  // namespace spinor::formulas
