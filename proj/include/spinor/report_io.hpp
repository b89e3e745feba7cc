#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "spinor/exact.hpp"
#include "spinor/local_factors.hpp"
#include "spinor/satake.hpp"
#include "spinor/verify.hpp"

namespace spinor {

// Integers that fit in 64 bits are JSON numbers; anything wider is a
// decimal string, and non-integral rationals are "num/den" strings.
nlohmann::ordered_json to_json(const Integer& x);
nlohmann::ordered_json to_json(const Rational& x);
nlohmann::ordered_json to_json(std::span<const Integer> xs);
nlohmann::ordered_json to_json(std::span<const Rational> xs);

nlohmann::ordered_json to_json(const SpinEigenvalueData& e);
nlohmann::ordered_json to_json(const SpinReport& r);
nlohmann::ordered_json to_json(const StandardReport& r);
nlohmann::ordered_json to_json(const SymbolicIdentityReport& r);
nlohmann::ordered_json to_json(const EulerFactor& f);

void write_spin_csv(std::ostream& os, std::span<const SpinReport> reports);
void write_standard_csv(std::ostream& os, std::span<const StandardReport> reports);
void write_symbolic_csv(std::ostream& os, std::span<const SymbolicIdentityReport> reports);
/// p, a_Delta(p), a_g20(p), lambda(p), lambda(T1), lambda(T2), lambda(T3).
void write_eigenvalue_csv(std::ostream& os, std::span<const SpinReport> reports);

}  // namespace spinor
