#include "spinor/exact.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinor {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("not an integer: " + to_string(x));
  return x.get_num();
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    const auto e = static_cast<unsigned long>(exponent);
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
  }
  if (sgn(base) == 0) throw std::domain_error("zero raised to a negative power");
  const auto e = static_cast<unsigned long>(-exponent);
  return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!x.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

Rational GaussianRational::norm() const { return Rational(real_ * real_ + imag_ * imag_); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  const Rational n = norm();
  return {Rational(real_ / n), Rational(-imag_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  real_ += o.real_;
  imag_ += o.imag_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  real_ -= o.real_;
  imag_ -= o.imag_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    real_ *= o.real_;
    return *this;
  }
  Rational re = real_ * o.real_ - imag_ * o.imag_;
  Rational im = real_ * o.imag_ + imag_ * o.real_;
  real_ = std::move(re);
  imag_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (is_real()) return real_.get_str();
  std::ostringstream os;
  os << '(' << real_.get_str() << (sgn(imag_) < 0 ? "-" : "+")
     << Rational(abs(imag_)).get_str() << "i)";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace spinor
