#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "spinor/exact.hpp"

namespace spinor {

/// Formal variables of the Satake ring. q stands for p^{1/2}.
enum class Var { beta = 0, alpha = 1, q = 2 };

/// Exponents of (beta, alpha, q).
using Exponent = std::array<int, 3>;

/// Selects the coefficient field. Rational mode rejects any coefficient with
/// a nonzero imaginary part; the two modes share one implementation.
enum class ScalarMode { rational, gaussian };

std::string to_string(const Exponent& e);

class Substitution;

/// Sparse Laurent polynomial in beta, alpha, q. Zero coefficients are never
/// stored; the zero polynomial is the empty term map.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational>;

  LaurentPoly() = default;
  LaurentPoly(long c);                    // NOLINT(implicit)
  LaurentPoly(const Rational& c);         // NOLINT(implicit)
  LaurentPoly(const GaussianRational& c);  // NOLINT(implicit)

  static LaurentPoly monomial(const GaussianRational& coeff, const Exponent& e);
  static LaurentPoly var(Var v, int power = 1);

  ScalarMode mode() const { return mode_; }
  /// Switching to rational mode fails if a coefficient is not real.
  LaurentPoly with_mode(ScalarMode mode) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  GaussianRational coefficient(const Exponent& e) const;

  std::optional<int> max_exponent(Var v) const;
  std::optional<int> min_exponent(Var v) const;
  /// Terms whose exponent of v equals e, with that exponent cleared.
  LaurentPoly slice(Var v, int e) const;

  /// Throws std::domain_error("non-unit") unless this is a single term.
  LaurentPoly invert_monomial() const;
  LaurentPoly pow(unsigned n) const;
  LaurentPoly substitute(const Substitution& s) const;

  /// The monomial m with a == m * b, if there is one.
  static std::optional<LaurentPoly> monomial_quotient(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const GaussianRational& c);
  void check_mode(const GaussianRational& c) const;

  TermMap terms_;
  ScalarMode mode_ = ScalarMode::rational;
};

inline LaurentPoly beta(int e = 1) { return LaurentPoly::var(Var::beta, e); }
inline LaurentPoly alpha(int e = 1) { return LaurentPoly::var(Var::alpha, e); }
inline LaurentPoly qvar(int e = 1) { return LaurentPoly::var(Var::q, e); }

/// Variable -> polynomial assignment; unassigned variables map to
/// themselves. A variable appearing with a negative exponent needs an
/// invertible (single-term) target.
class Substitution {
 public:
  Substitution& set(Var v, LaurentPoly target);
  const std::optional<LaurentPoly>& target(Var v) const { return targets_[static_cast<int>(v)]; }

 private:
  std::array<std::optional<LaurentPoly>, 3> targets_;
};

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly laurent_invert_monomial(const LaurentPoly& a);
LaurentPoly laurent_substitute(const LaurentPoly& a, const Substitution& s);

}  // namespace spinor
