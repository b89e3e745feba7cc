#include "spinor/qexp.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace spinor {

const Integer& QSeries::operator[](long n) const {
  if (n < 0 || n > length()) throw std::out_of_range("q-expansion index " + std::to_string(n) + " past truncation");
  return coeffs[static_cast<std::size_t>(n)];
}

Integer divisor_sum(long n, unsigned k) {
  if (n <= 0) throw std::domain_error("undefined");
  Integer sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    sum += ipow(Integer(d), k);
    if (d != n / d) sum += ipow(Integer(n / d), k);
  }
  return sum;
}

QSeries eisenstein_qexp(int k, int length) {
  if (length < 0) throw std::invalid_argument("negative q-expansion length");
  long scale = 0;
  unsigned power = 0;
  switch (k) {
    case 4: scale = 240; power = 3; break;
    case 6: scale = -504; power = 5; break;
    default: throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(k));
  }
  QSeries out{k, std::vector<Integer>(static_cast<std::size_t>(length) + 1)};
  out.coeffs[0] = 1;
  for (long n = 1; n <= length; ++n) out.coeffs[n] = scale * divisor_sum(n, power);
  return out;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const int length = std::min(a.length(), b.length());
  QSeries out{a.weight + b.weight, std::vector<Integer>(static_cast<std::size_t>(length) + 1)};
  for (int n = 0; n <= length; ++n) {
    Integer acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (sgn(a.coeffs[i]) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[n - i].get_mpz_t());
    }
    out.coeffs[n] = std::move(acc);
  }
  return out;
}

QSeries delta_qexp(int length) {
  if (length < 1) throw std::invalid_argument("q-expansion length must be >= 1");
  const QSeries e4 = eisenstein_qexp(4, length);
  const QSeries e6 = eisenstein_qexp(6, length);
  const QSeries e4_cubed = series_mul(series_mul(e4, e4), e4);
  const QSeries e6_squared = series_mul(e6, e6);
  QSeries out{12, std::vector<Integer>(static_cast<std::size_t>(length) + 1)};
  for (int n = 0; n <= length; ++n) {
    Integer diff = e4_cubed.coeffs[n] - e6_squared.coeffs[n];
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 1728))
      throw std::logic_error("Delta: (E4^3 - E6^2) not divisible by 1728 at n=" + std::to_string(n));
    mpz_divexact_ui(out.coeffs[n].get_mpz_t(), diff.get_mpz_t(), 1728);
  }
  return out;
}

QSeries g20_qexp(int length) {
  const QSeries e4 = eisenstein_qexp(4, length);
  QSeries out = series_mul(series_mul(delta_qexp(length), e4), e4);
  // Delta * E4^2 already has a(1) = 1; the normalization is kept explicit.
  const Integer lead = out.coeffs.at(1);
  for (auto& c : out.coeffs) {
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) throw std::logic_error("g20 normalization");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
  }
  return out;
}

namespace {

// Smallest prime factor table for 0..n.
std::vector<long> smallest_factors(long n) {
  std::vector<long> spf(static_cast<std::size_t>(n) + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (long j = i; j <= n; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

}  // namespace

MultiplicativityReport check_hecke_multiplicativity(const QSeries& s, long limit) {
  if (s.weight < 1) throw std::invalid_argument("weight must be positive");
  if (limit > s.length()) throw std::invalid_argument("insufficient q-expansion length");
  const auto spf = smallest_factors(limit);
  MultiplicativityReport report;

  for (long n = 2; n <= limit; ++n) {
    const long p = spf[n];
    long pk = 1;
    while (n % (pk * p) == 0) pk *= p;
    if (pk == n) continue;  // prime power
    const long m = n / pk;
    if (s[n] != s[pk] * s[m]) {
      report.ok = false;
      report.witness = {std::min(pk, m), std::max(pk, m)};
      report.detail = "a(" + std::to_string(n) + ") != a(" + std::to_string(pk) + ") a(" + std::to_string(m) + ")";
      return report;
    }
  }

  for (long p = 2; p <= limit; ++p) {
    if (spf[p] != p) continue;
    const Integer pw = ipow(Integer(p), static_cast<unsigned long>(s.weight - 1));
    long prev = 1;
    long cur = p;
    while (cur <= limit / p) {
      const long next = cur * p;
      if (s[next] != s[p] * s[cur] - pw * s[prev]) {
        report.ok = false;
        report.witness = {p, cur};
        report.detail = "prime-power recursion fails at a(" + std::to_string(next) + ")";
        return report;
      }
      prev = cur;
      cur = next;
    }
  }
  return report;
}

bool ramanujan_bound_check(const QSeries& s, long bound) {
  if (s.weight < 1) throw std::invalid_argument("weight must be positive");
  if (bound > s.length()) throw std::invalid_argument("insufficient q-expansion length");
  for (long p : primes_up_to(bound)) {
    const Integer rhs = 4 * ipow(Integer(p), static_cast<unsigned long>(s.weight - 1));
    if (s[p] * s[p] > rhs) return false;
  }
  return true;
}

std::optional<long> check_691_congruence(const QSeries& delta, long limit) {
  if (limit > delta.length()) throw std::invalid_argument("insufficient q-expansion length");
  for (long n = 1; n <= limit; ++n) {
    Integer diff = delta[n] - divisor_sum(n, 11);
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 691)) return n;
  }
  return std::nullopt;
}

void write_qexp_csv(std::ostream& os, const QSeries& s, int upto) {
  os << "n,a(n)\n";
  for (int n = 0; n <= upto; ++n) os << n << ',' << s[n].get_str() << '\n';
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  const auto spf = smallest_factors(bound);
  for (long n = 2; n <= bound; ++n)
    if (spf[n] == n) out.push_back(n);
  return out;
}

}  // namespace spinor
