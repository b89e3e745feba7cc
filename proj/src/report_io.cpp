#include "spinor/report_io.hpp"

#include <ostream>

namespace spinor {

using nlohmann::ordered_json;

ordered_json to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return x.get_str();
}

ordered_json to_json(const Rational& x) {
  if (is_integer(x)) return to_json(Integer(x.get_num()));
  return x.get_str();
}

ordered_json to_json(std::span<const Integer> xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

ordered_json to_json(std::span<const Rational> xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

ordered_json to_json(const SpinEigenvalueData& e) {
  return ordered_json{{"lambda_p", to_json(e.lambda_p)},
                      {"lambda_T1", to_json(e.lambda_t1)},
                      {"lambda_T2", to_json(e.lambda_t2)},
                      {"lambda_T3", to_json(e.lambda_t3)}};
}

ordered_json to_json(const SpinReport& r) {
  ordered_json eig = to_json(r.eigenvalues);
  ordered_json eigenvalues{{"a_delta", to_json(r.a_f)}, {"a_g20", to_json(r.a_g)}};
  eigenvalues.update(eig);
  return ordered_json{{"prime", r.prime},
                      {"kappa", r.kappa},
                      {"lhs", to_json(std::span<const Integer>(r.lhs))},
                      {"rhs", to_json(std::span<const Integer>(r.rhs))},
                      {"equal", r.equal},
                      {"eigenvalues", eigenvalues}};
}

ordered_json to_json(const StandardReport& r) {
  return ordered_json{{"prime", r.prime},
                      {"kappa", r.kappa},
                      {"lhs", to_json(std::span<const Integer>(r.lhs_arithmetic))},
                      {"rhs", to_json(std::span<const Integer>(r.rhs_arithmetic))},
                      {"lhs_unit_scale", to_json(std::span<const Rational>(r.lhs))},
                      {"rhs_unit_scale", to_json(std::span<const Rational>(r.rhs))},
                      {"equal", r.equal},
                      {"literal_mixed_normalization_equal", r.literal_equal},
                      {"eigenvalues", ordered_json{{"a_delta", to_json(r.a_f)}, {"a_g20", to_json(r.a_g)}}}};
}

ordered_json to_json(const SymbolicIdentityReport& r) {
  ordered_json out{{"identity", r.identity}, {"kappa", r.kappa}, {"holds", r.holds}};
  out["difference"] = r.difference.to_string();
  if (!r.component.empty()) out["component"] = r.component;
  if (auto m = r.offending_monomial()) {
    out["offending_monomial"] = ordered_json{{"exponents", {m->first[0], m->first[1], m->first[2]}},
                                             {"coefficient", m->second.to_string()}};
  }
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

ordered_json to_json(const EulerFactor& f) {
  const auto coeffs = f.padded();
  return ordered_json{{"prime", to_json(f.prime)},
                      {"label", f.label},
                      {"degree", f.degree_expected},
                      {"coefficients", to_json(std::span<const Rational>(coeffs))}};
}

namespace {

template <class T>
void write_row(std::ostream& os, const std::vector<T>& xs) {
  for (const auto& x : xs) os << ',' << x.get_str();
}

void write_indexed_header(std::ostream& os, const char* prefix, int count) {
  for (int i = 0; i < count; ++i) os << ',' << prefix << i;
}

}  // namespace

void write_spin_csv(std::ostream& os, std::span<const SpinReport> reports) {
  os << "prime,kappa,equal";
  write_indexed_header(os, "lhs_", 9);
  write_indexed_header(os, "rhs_", 9);
  os << '\n';
  for (const auto& r : reports) {
    os << r.prime << ',' << r.kappa << ',' << (r.equal ? "true" : "false");
    write_row(os, r.lhs);
    write_row(os, r.rhs);
    os << '\n';
  }
}

void write_standard_csv(std::ostream& os, std::span<const StandardReport> reports) {
  os << "prime,kappa,equal,literal_equal";
  write_indexed_header(os, "lhs_", 8);
  write_indexed_header(os, "rhs_", 8);
  os << '\n';
  for (const auto& r : reports) {
    os << r.prime << ',' << r.kappa << ',' << (r.equal ? "true" : "false") << ','
       << (r.literal_equal ? "true" : "false");
    write_row(os, r.lhs_arithmetic);
    write_row(os, r.rhs_arithmetic);
    os << '\n';
  }
}

void write_symbolic_csv(std::ostream& os, std::span<const SymbolicIdentityReport> reports) {
  os << "identity,kappa,holds,component,difference\n";
  for (const auto& r : reports) {
    os << r.identity << ',' << r.kappa << ',' << (r.holds ? "true" : "false") << ',' << r.component << ",\""
       << r.difference.to_string() << "\"\n";
  }
}

void write_eigenvalue_csv(std::ostream& os, std::span<const SpinReport> reports) {
  os << "p,a_delta,a_g20,lambda_p,lambda_T1,lambda_T2,lambda_T3\n";
  for (const auto& r : reports) {
    const auto& e = r.eigenvalues;
    os << r.prime << ',' << r.a_f.get_str() << ',' << r.a_g.get_str() << ',' << e.lambda_p.get_str() << ','
       << e.lambda_t1.get_str() << ',' << e.lambda_t2.get_str() << ',' << e.lambda_t3.get_str() << '\n';
  }
}

}  // namespace spinor
