#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "spinor/exact.hpp"
#include "spinor/local_factors.hpp"
#include "spinor/qexp.hpp"
#include "spinor/satake.hpp"

namespace spinor {

/// Weight of F_12 and of Delta.
inline constexpr int kF12Weight = 12;

/// q-expansions of Delta and g_20, built once and shared read-only.
struct NewformTables {
  QSeries delta;
  QSeries g20;

  static NewformTables build(int length);
  int length() const { return std::min(delta.length(), g20.length()); }
  /// Throws std::invalid_argument("insufficient q-expansion length").
  void require(long n) const;
};

struct SpinReport {
  long prime = 0;
  int kappa = kF12Weight;
  Integer a_f;
  Integer a_g;
  SpinEigenvalueData eigenvalues;
  /// Andrianov polynomial from the Miyawaki eigenvalues.
  std::vector<Integer> lhs;
  /// L(s-9, Delta) L(s-10, Delta) L(s, Delta x g_20).
  std::vector<Integer> rhs;
  bool equal = false;
};

SpinReport verify_spin_at_prime(const NewformTables& tables, long p);

struct StandardReport {
  long prime = 0;
  int kappa = kF12Weight;
  Integer a_f;
  Integer a_g;
  /// Unit-scale degree-7 factor from the Satake parameters.
  std::vector<Rational> lhs;
  /// sym2(Delta) renormalized to unit scale, times the two g_20 factors.
  std::vector<Rational> rhs;
  /// Both sides after X -> p^{kappa-1} X; integral.
  std::vector<Integer> lhs_arithmetic;
  std::vector<Integer> rhs_arithmetic;
  bool equal = false;
  /// Whether the product with sym2 left at scale p^{kappa-1} also matches.
  bool literal_equal = false;
};

/// Symbolic unit-scale standard factor of weight kappa, rewritten in traces.
TraceForm standard_trace_form(int kappa);
/// Symbolic spin factor of weight kappa, rewritten in traces.
TraceForm spin_trace_form(int kappa);

StandardReport verify_standard_at_prime(const NewformTables& tables, long p, const TraceForm& standard_form);
StandardReport verify_standard_at_prime(const NewformTables& tables, long p);

/// lambda_F(p) == 0 iff a_Delta(p) == 0, plus the strict inequality
/// (p^{k2/2-1}(p+1))^2 > 4 p^{k2-1} for k2 = 20.
bool nonvanishing_check(const NewformTables& tables, long p);

/// Strict integer inequality behind nonvanishing, for a given weight k2.
bool nonvanishing_inequality(long p, int k2);

/// Applies fn to every item on up to `jobs` threads; output order matches
/// input order. The first exception thrown by a worker is rethrown.
template <class T, class Fn>
auto parallel_map(std::span<const T> items, unsigned jobs, Fn fn) -> std::vector<decltype(fn(items[0]))> {
  using Out = decltype(fn(items[0]));
  std::vector<Out> out(items.size());
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace spinor
