#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinor/exact.hpp"

namespace spinor {

/// Truncated q-expansion: coefficients a(0..length) of a level-one modular
/// form of the given weight.
struct QSeries {
  int weight = 0;
  std::vector<Integer> coeffs;

  int length() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Throws std::out_of_range past the truncation.
  const Integer& operator[](long n) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;
};

/// sigma_k(n) = sum of d^k over the divisors d of n. Throws
/// std::domain_error("undefined") for n <= 0.
Integer divisor_sum(long n, unsigned k);

/// E_4 or E_6 truncated after q^length; any other weight throws.
QSeries eisenstein_qexp(int k, int length);

/// Ramanujan's Delta = (E_4^3 - E_6^2) / 1728.
QSeries delta_qexp(int length);

/// The weight-20 newform, realized as Delta * E_4^2 (its cusp space is
/// one-dimensional, so the a(1)-normalized product is the newform).
QSeries g20_qexp(int length);

/// Truncated product of two series; weights add.
QSeries series_mul(const QSeries& a, const QSeries& b);

struct MultiplicativityReport {
  bool ok = true;
  /// First failing pair (m, n): coprime factors, or (p, p^r) for a failed
  /// prime-power recursion a(p^{r+1}) = a(p) a(p^r) - p^{k-1} a(p^{r-1}).
  std::optional<std::pair<long, long>> witness;
  std::string detail;
};

/// Throws std::invalid_argument for weight < 1.
/// Checks coprime multiplicativity for every n <= limit first (by
/// increasing n), then the prime-power recursion.
MultiplicativityReport check_hecke_multiplicativity(const QSeries& s, long limit);

/// a(p)^2 <= 4 p^{k-1} for every prime p <= bound.
bool ramanujan_bound_check(const QSeries& s, long bound);

/// a(n) == sigma_11(n) mod 691 for 1 <= n <= limit; returns the first
/// violating n.
std::optional<long> check_691_congruence(const QSeries& delta, long limit);

void write_qexp_csv(std::ostream& os, const QSeries& s, int upto);

// Small-integer number theory used throughout.
bool is_prime(long n);
std::vector<long> primes_up_to(long bound);

}  // namespace spinor
