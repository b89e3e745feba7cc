#include "spinor/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "spinor/report_io.hpp"
#include "spinor/verify.hpp"

namespace spinor::cli {

using nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format format_or(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

void require_f12_weight(const RunConfig& cfg, const char* command) {
  if (cfg.kappa_list != std::vector<int>{kF12Weight})
    throw ConfigError(std::string(command) + " runs on F_12 only; --kappa must be 12");
}

ordered_json config_json(const RunConfig& cfg) {
  return ordered_json{{"max_prime", cfg.max_prime}, {"series_length", cfg.effective_series_length()}};
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Closed forms used by the sweeps must match their eigenvalue definitions
// before any prime is checked.
bool closed_forms_hold(std::ostream& err) {
  for (const auto& r : {check_rankin_closed_form(kF12Weight), check_sym2_closed_form(kF12Weight),
                        check_standard_renormalization(kF12Weight)}) {
    if (!r.holds) {
      err << "closed form " << r.identity << " fails at " << r.component << ": " << r.difference.to_string() << '\n';
      return false;
    }
  }
  return true;
}

int cmd_verify_spin(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_f12_weight(cfg, "verify-spin");
  if (!closed_forms_hold(err)) return kExitMismatch;
  Timer timer;
  const auto tables = NewformTables::build(cfg.effective_series_length());
  const auto primes = primes_up_to(cfg.max_prime);
  const auto reports = parallel_map(std::span<const long>(primes), cfg.jobs,
                                    [&](long p) { return verify_spin_at_prime(tables, p); });
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.equal ? 0 : 1;

  if (format_or(cfg, Format::json) == Format::csv) {
    write_spin_csv(out, reports);
  } else {
    ordered_json records = ordered_json::array();
    for (const auto& r : reports) records.push_back(to_json(r));
    ordered_json doc{{"command", "verify-spin"},
                     {"config", config_json(cfg)},
                     {"records", std::move(records)},
                     {"summary", {{"primes_checked", reports.size()}, {"failures", failures}}}};
    out << doc.dump(2) << '\n';
  }
  err << "verify-spin: " << reports.size() << " primes, " << failures << " failures, " << timer.seconds() << " s\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_verify_standard(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_f12_weight(cfg, "verify-standard");
  if (!closed_forms_hold(err)) return kExitMismatch;
  Timer timer;
  const auto tables = NewformTables::build(cfg.effective_series_length());
  const auto form = standard_trace_form(kF12Weight);
  const auto primes = primes_up_to(cfg.max_prime);
  const auto reports = parallel_map(std::span<const long>(primes), cfg.jobs,
                                    [&](long p) { return verify_standard_at_prime(tables, p, form); });
  std::size_t failures = 0;
  for (const auto& r : reports) failures += r.equal ? 0 : 1;

  if (format_or(cfg, Format::json) == Format::csv) {
    write_standard_csv(out, reports);
  } else {
    ordered_json records = ordered_json::array();
    for (const auto& r : reports) records.push_back(to_json(r));
    ordered_json doc{{"command", "verify-standard"},
                     {"config", config_json(cfg)},
                     {"records", std::move(records)},
                     {"summary", {{"primes_checked", reports.size()}, {"failures", failures}}}};
    out << doc.dump(2) << '\n';
  }
  err << "verify-standard: " << reports.size() << " primes, " << failures << " failures, " << timer.seconds()
      << " s\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_symbolic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SymbolicIdentityReport> reports;
  for (int kappa : cfg.kappa_list) {
    auto suite = run_identity_suite(kappa);
    reports.insert(reports.end(), suite.begin(), suite.end());
  }
  std::size_t failures = 0;
  for (const auto& r : reports) {
    if (r.holds) continue;
    ++failures;
    const auto m = r.offending_monomial();
    err << "identity " << r.identity << " (kappa " << r.kappa << ") fails at " << r.component;
    if (m) err << ": monomial " << to_string(m->first) << " coefficient " << m->second;
    err << '\n';
  }
  if (format_or(cfg, Format::json) == Format::csv) {
    write_symbolic_csv(out, reports);
  } else {
    ordered_json records = ordered_json::array();
    for (const auto& r : reports) records.push_back(to_json(r));
    ordered_json doc{{"command", "symbolic-check"},
                     {"records", std::move(records)},
                     {"summary", {{"identities_checked", reports.size()}, {"failures", failures}}}};
    out << doc.dump(2) << '\n';
  }
  return failures == 0 ? kExitOk : kExitMismatch;
}

int cmd_qexp(const RunConfig& cfg, const std::string& form, int length, std::ostream& out) {
  if (length < 1) throw ConfigError("qexp length must be >= 1");
  QSeries s;
  if (form == "delta") s = delta_qexp(length);
  else if (form == "g20") s = g20_qexp(length);
  else throw ConfigError("unknown form '" + form + "' (expected delta or g20)");

  if (format_or(cfg, Format::csv) == Format::csv) {
    write_qexp_csv(out, s, length);
  } else {
    ordered_json doc{{"form", form},
                     {"weight", s.weight},
                     {"coefficients", to_json(std::span<const Integer>(s.coeffs))}};
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

ordered_json coefficients_json(const std::vector<Rational>& c) { return to_json(std::span<const Rational>(c)); }

int cmd_euler(const RunConfig& cfg, long p, const std::string& kind, std::ostream& out) {
  if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
  const int length = std::max<long>(p, cfg.series_length.value_or(0));
  const auto tables = NewformTables::build(length);
  const Integer& af = tables.delta[p];
  const Integer& ag = tables.g20[p];
  ordered_json doc{{"prime", p}, {"kind", kind}, {"kappa", kF12Weight}};
  bool equal = true;

  if (kind == "spin") {
    const auto report = verify_spin_at_prime(tables, p);
    const auto satake = spin_trace_form(kF12Weight).evaluate(af, ag, p);
    doc["lhs"] = to_json(std::span<const Integer>(report.lhs));
    doc["rhs"] = to_json(std::span<const Integer>(report.rhs));
    doc["satake"] = coefficients_json(satake);
    doc["eigenvalues"] = to_json(report.eigenvalues);
    equal = report.equal && UniPoly(satake) == UniPoly::from_integers(report.lhs);
  } else if (kind == "standard") {
    const auto report = verify_standard_at_prime(tables, p);
    doc["lhs"] = to_json(std::span<const Integer>(report.lhs_arithmetic));
    doc["rhs"] = to_json(std::span<const Integer>(report.rhs_arithmetic));
    doc["lhs_unit_scale"] = coefficients_json(report.lhs);
    doc["rhs_unit_scale"] = coefficients_json(report.rhs);
    doc["literal_mixed_normalization"] = to_json(standard7_rhs(af, ag, kF12Weight, p));
    equal = report.equal;
  } else if (kind == "hecke") {
    const auto delta = hecke_local(af, kF12Weight, p);
    const auto g20 = hecke_local(ag, 20, p);
    const auto delta_satake = TraceForm::from(xpoly_from_eigenvalues({LaurentPoly::monomial(1, {1, 0, 11}),
                                                                       LaurentPoly::monomial(1, {-1, 0, 11})}),
                                              kF12Weight)
                                  .evaluate(af, ag, p);
    const auto g20_satake = TraceForm::from(xpoly_from_eigenvalues({LaurentPoly::monomial(1, {0, 1, 19}),
                                                                     LaurentPoly::monomial(1, {0, -1, 19})}),
                                            kF12Weight)
                                .evaluate(af, ag, p);
    doc["delta"] = to_json(delta);
    doc["delta_satake"] = coefficients_json(delta_satake);
    doc["g20"] = to_json(g20);
    doc["g20_satake"] = coefficients_json(g20_satake);
    equal = delta.poly == UniPoly(delta_satake) && g20.poly == UniPoly(g20_satake);
  } else if (kind == "rankin") {
    const auto closed = rankin_local(af, kF12Weight, ag, 20, p);
    std::vector<LaurentPoly> eig;
    for (int eb : {1, -1})
      for (int ea : {1, -1}) eig.push_back(LaurentPoly::monomial(1, {eb, ea, 30}));
    const auto tensor = TraceForm::from(xpoly_from_eigenvalues(eig), kF12Weight).evaluate(af, ag, p);
    doc["closed_form"] = to_json(closed);
    doc["tensor_determinant"] = coefficients_json(tensor);
    equal = closed.poly == UniPoly(tensor);
  } else {
    throw ConfigError("unknown factor kind '" + kind + "' (expected spin, standard, hecke or rankin)");
  }
  doc["equal"] = equal;
  out << doc.dump(2) << '\n';
  return equal ? kExitOk : kExitMismatch;
}

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  require_f12_weight(cfg, "export");
  const auto tables = NewformTables::build(cfg.effective_series_length());
  const auto primes = primes_up_to(cfg.max_prime);
  const auto reports = parallel_map(std::span<const long>(primes), cfg.jobs,
                                    [&](long p) { return verify_spin_at_prime(tables, p); });
  if (format_or(cfg, Format::csv) == Format::csv) {
    write_eigenvalue_csv(out, reports);
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json row{{"p", r.prime}, {"a_delta", to_json(r.a_f)}, {"a_g20", to_json(r.a_g)}};
      row.update(to_json(r.eigenvalues));
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::string RunConfig::validate() const {
  if (max_prime < 2) return "--max-prime must be >= 2";
  if (effective_series_length() <= max_prime) return "--series-length must exceed --max-prime";
  if (kappa_list.empty()) return "--kappa needs at least one weight";
  for (int k : kappa_list)
    if (k < 12 || k % 2 != 0) return "weight " + std::to_string(k) + " must be even and >= 12";
  if (jobs < 1) return "--jobs must be >= 1";
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the F_12 spinor L-function factorization"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags override");

  RunConfig cfg;
  std::string format;
  int series_length = 0;
  bool json_flag = false;
  app.add_option("--max-prime", cfg.max_prime, "largest prime to check")->capture_default_str();
  app.add_option("--kappa", cfg.kappa_list, "comma-separated even weights >= 12")->delimiter(',');
  app.add_option("--series-length", series_length, "q-expansion length (default max-prime + 1)");
  app.add_option("--out", cfg.output_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--json", json_flag, "same as --format json");
  app.add_option("--jobs", cfg.jobs, "worker threads for prime sweeps")->capture_default_str();

  auto* verify_spin = app.add_subcommand("verify-spin", "check the degree-8 spinor factorization at every prime");
  auto* verify_standard = app.add_subcommand("verify-standard", "check the degree-7 standard factorization");
  auto* symbolic = app.add_subcommand("symbolic-check", "run the Satake-parameter identity suite");
  auto* qexp = app.add_subcommand("qexp", "print q-expansion coefficients");
  std::string form;
  int qexp_length = 0;
  qexp->add_option("form", form, "delta or g20")->required();
  qexp->add_option("length", qexp_length, "largest index")->required();
  auto* euler = app.add_subcommand("euler", "print one local factor by every available route");
  long euler_prime = 0;
  std::string kind;
  euler->add_option("prime", euler_prime)->required();
  euler->add_option("kind", kind, "spin, standard, hecke or rankin")->required();
  auto* exporter = app.add_subcommand("export", "eigenvalue table for every prime <= max-prime");
  for (auto* sub : {verify_spin, verify_standard, symbolic, qexp, euler, exporter}) sub->fallthrough();

  std::vector<const char*> argv{"spinor-verify"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (app.count("--series-length") > 0) cfg.series_length = series_length;
  if (json_flag) cfg.format = Format::json;
  if (!format.empty()) cfg.format = format == "csv" ? Format::csv : Format::json;
  if (const auto problem = cfg.validate(); !problem.empty()) {
    err << "error: " << problem << '\n';
    return kExitConfig;
  }

  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "error: cannot open " << cfg.output_path << '\n';
      return kExitConfig;
    }
  }
  std::ostream& sink = cfg.output_path.empty() ? out : file;

  try {
    if (verify_spin->parsed()) return cmd_verify_spin(cfg, sink, err);
    if (verify_standard->parsed()) return cmd_verify_standard(cfg, sink, err);
    if (symbolic->parsed()) return cmd_symbolic(cfg, sink, err);
    if (qexp->parsed()) return cmd_qexp(cfg, form, qexp_length, sink);
    if (euler->parsed()) return cmd_euler(cfg, euler_prime, kind, sink);
    if (exporter->parsed()) return cmd_export(cfg, sink);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitConfig;
}

}  // namespace spinor::cli
