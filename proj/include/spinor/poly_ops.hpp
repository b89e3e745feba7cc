#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spinor {

// Dense coefficient-list helpers shared by the numeric and symbolic
// polynomial rings. Coefficients are listed constant term first.

template <class R>
std::vector<R> convolve(std::span<const R> a, std::span<const R> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<R> out(a.size() + b.size() - 1, R(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

template <class R>
std::vector<R> convolve_all(const std::vector<std::vector<R>>& factors) {
  std::vector<R> acc{R(1)};
  for (const auto& f : factors) acc = convolve<R>(acc, f);
  return acc;
}

}  // namespace spinor
