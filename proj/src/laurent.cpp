#include "spinor/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace spinor {

namespace {

constexpr std::array<const char*, 3> kVarNames = {"b", "a", "q"};

ScalarMode join(ScalarMode a, ScalarMode b) {
  return (a == ScalarMode::gaussian || b == ScalarMode::gaussian) ? ScalarMode::gaussian : ScalarMode::rational;
}

Exponent add(const Exponent& a, const Exponent& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

}  // namespace

std::string to_string(const Exponent& e) {
  std::ostringstream os;
  os << '(' << e[0] << ", " << e[1] << ", " << e[2] << ')';
  return os.str();
}

LaurentPoly::LaurentPoly(long c) { add_term({0, 0, 0}, GaussianRational(c)); }

LaurentPoly::LaurentPoly(const Rational& c) { add_term({0, 0, 0}, GaussianRational(c)); }

LaurentPoly::LaurentPoly(const GaussianRational& c) : mode_(ScalarMode::gaussian) { add_term({0, 0, 0}, c); }

LaurentPoly LaurentPoly::monomial(const GaussianRational& coeff, const Exponent& e) {
  LaurentPoly out;
  if (!coeff.is_real()) out.mode_ = ScalarMode::gaussian;
  out.add_term(e, coeff);
  return out;
}

LaurentPoly LaurentPoly::var(Var v, int power) {
  Exponent e{0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(GaussianRational(1), e);
}

void LaurentPoly::check_mode(const GaussianRational& c) const {
  if (mode_ == ScalarMode::rational && !c.is_real())
    throw std::domain_error("gaussian coefficient in rational scalar mode");
}

void LaurentPoly::add_term(const Exponent& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  check_mode(c);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::with_mode(ScalarMode mode) const {
  LaurentPoly out = *this;
  out.mode_ = mode;
  for (const auto& [e, c] : out.terms_) out.check_mode(c);
  return out;
}

GaussianRational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::optional<int> LaurentPoly::max_exponent(Var v) const {
  std::optional<int> out;
  for (const auto& [e, c] : terms_) {
    const int x = e[static_cast<int>(v)];
    if (!out || x > *out) out = x;
  }
  return out;
}

std::optional<int> LaurentPoly::min_exponent(Var v) const {
  std::optional<int> out;
  for (const auto& [e, c] : terms_) {
    const int x = e[static_cast<int>(v)];
    if (!out || x < *out) out = x;
  }
  return out;
}

LaurentPoly LaurentPoly::slice(Var v, int e) const {
  LaurentPoly out;
  out.mode_ = mode_;
  const int idx = static_cast<int>(v);
  for (const auto& [exp, c] : terms_) {
    if (exp[idx] != e) continue;
    Exponent cleared = exp;
    cleared[idx] = 0;
    out.add_term(cleared, c);
  }
  return out;
}

LaurentPoly LaurentPoly::invert_monomial() const {
  if (!is_monomial()) throw std::domain_error("non-unit");
  const auto& [e, c] = *terms_.begin();
  LaurentPoly out = monomial(c.inverse(), {-e[0], -e[1], -e[2]});
  out.mode_ = join(out.mode_, mode_);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L);
  result.mode_ = mode_;
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const Substitution& s) const {
  // Per-variable power cache; each distinct exponent is expanded once.
  std::array<std::map<int, LaurentPoly>, 3> cache;
  auto power_of = [&](int idx, int e) -> const LaurentPoly& {
    auto it = cache[idx].find(e);
    if (it != cache[idx].end()) return it->second;
    const auto& target = s.target(static_cast<Var>(idx));
    LaurentPoly value;
    if (!target) {
      Exponent ex{0, 0, 0};
      ex[idx] = e;
      value = monomial(GaussianRational(1), ex);
    } else if (e >= 0) {
      value = target->pow(static_cast<unsigned>(e));
    } else {
      if (!target->is_monomial())
        throw std::domain_error(std::string("substitution: negative power of a non-invertible target for ") +
                                kVarNames[idx]);
      value = target->invert_monomial().pow(static_cast<unsigned>(-e));
    }
    return cache[idx].emplace(e, std::move(value)).first->second;
  };

  LaurentPoly out;
  out.mode_ = mode_;
  for (int idx = 0; idx < 3; ++idx)
    if (const auto& t = s.target(static_cast<Var>(idx))) out.mode_ = join(out.mode_, t->mode_);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = monomial(c, {0, 0, 0});
    term.mode_ = out.mode_;
    for (int idx = 0; idx < 3; ++idx) {
      if (e[idx] == 0) continue;
      term *= power_of(idx, e[idx]);
    }
    out += term;
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::monomial_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero() || a.term_count() != b.term_count()) return std::nullopt;
  const auto& [ea, ca] = *a.terms_.begin();
  const auto& [eb, cb] = *b.terms_.begin();
  LaurentPoly m = monomial(ca / cb, {ea[0] - eb[0], ea[1] - eb[1], ea[2] - eb[2]});
  if (m * b != a) return std::nullopt;
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  mode_ = join(mode_, o.mode_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  mode_ = join(mode_, o.mode_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.mode_ = join(a.mode_, b.mode_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == GaussianRational(1);
    const bool constant = e == Exponent{0, 0, 0};
    if (!unit || constant) os << c;
    bool need_star = !unit || constant;
    for (int idx = 0; idx < 3; ++idx) {
      if (e[idx] == 0) continue;
      if (need_star) os << '*';
      os << kVarNames[idx];
      if (e[idx] != 1) os << '^' << e[idx];
      need_star = true;
    }
  }
  return os.str();
}

Substitution& Substitution::set(Var v, LaurentPoly target) {
  targets_[static_cast<int>(v)] = std::move(target);
  return *this;
}

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly laurent_invert_monomial(const LaurentPoly& a) { return a.invert_monomial(); }
LaurentPoly laurent_substitute(const LaurentPoly& a, const Substitution& s) { return a.substitute(s); }

}  // namespace spinor
