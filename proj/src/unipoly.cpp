#include "spinor/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spinor/poly_ops.hpp"

namespace spinor {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UniPoly UniPoly::from_integers(std::span<const Integer> coeffs) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c);
  return UniPoly(std::move(out));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::operator[](int j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(j)];
}

bool UniPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

std::vector<Integer> UniPoly::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_integer(c));
  return out;
}

UniPoly UniPoly::scale_variable(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational power(1);
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return UniPoly(std::move(out));
}

std::vector<Rational> UniPoly::reciprocal_series(int order) const {
  if (is_zero() || sgn(coeffs_[0]) == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  const Rational c0_inv = 1 / coeffs_[0];
  out[0] = c0_inv;
  for (int n = 1; n <= order; ++n) {
    Rational acc(0);
    for (int j = 1; j <= std::min(n, degree()); ++j) acc += coeffs_[j] * out[n - j];
    out[n] = -acc * c0_inv;
  }
  return out;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> out(coeffs_);
  for (auto& c : out) c = -c;
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  coeffs_ = convolve<Rational>(coeffs_, o.coeffs_);
  trim();
  return *this;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= degree(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    const Rational mag = abs(c);
    if (j == 0 || mag != 1) os << mag.get_str();
    if (j >= 1) os << 'X';
    if (j >= 2) os << '^' << j;
  }
  return os.str();
}

UniPoly unipoly_mul(const UniPoly& a, const UniPoly& b) { return a * b; }

UniPoly unipoly_scale_variable(const UniPoly& a, const Rational& c) { return a.scale_variable(c); }

}  // namespace spinor
