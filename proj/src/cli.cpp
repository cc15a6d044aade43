#include "ptsym/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptsym/claims.hpp"
#include "ptsym/error.hpp"
#include "ptsym/format.hpp"
#include "ptsym/hamiltonian.hpp"
#include "ptsym/scan.hpp"
#include "ptsym/symmetry.hpp"

namespace ptsym::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct UsageError {
  std::string message;
};

struct Options {
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> c;
  std::string format = "text";
  double tol_eq = kDefaultTolEq;
  double tol_ineq = kDefaultTolIneq;
  std::string sweep;
  std::optional<double> from;
  std::optional<double> to;
  std::optional<int> steps;
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return Format::Text;
}

double require_finite(const std::optional<double>& value, const char* flag) {
  if (!value) throw UsageError{std::string("missing required flag ") + flag};
  if (!std::isfinite(*value)) throw UsageError{std::string(flag) + " must be finite"};
  return *value;
}

HamiltonianParams required_params(const Options& opt) {
  return HamiltonianParams::make(require_finite(opt.a, "--a"), require_finite(opt.b, "--b"),
                                 require_finite(opt.c, "--c"));
}

// JSON numbers: finite values as round-trip doubles, NaN/inf as null.
Json jnum(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0.0 ? 0.0 : x;
}

Json jcomplex(Complex z) { return Json{{"re", jnum(z.real())}, {"im", jnum(z.imag())}}; }

Json jvec(const Vec2C& v) { return Json::array({jcomplex(v.x0), jcomplex(v.x1)}); }

Json jmat(const Mat2C& m) {
  return Json::array({Json::array({jcomplex(m.m00), jcomplex(m.m01)}),
                      Json::array({jcomplex(m.m10), jcomplex(m.m11)})});
}

Json jparams(const HamiltonianParams& p) {
  return Json{{"a", jnum(p.a)}, {"b", jnum(p.b)}, {"c", jnum(p.c)}};
}

Json jerror(const Error& e) {
  return Json{{"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

std::string text_params(const HamiltonianParams& p) {
  return "params: a=" + fmt::text(p.a) + " b=" + fmt::text(p.b) + " c=" + fmt::text(p.c);
}

std::string text_vec(const Vec2C& v) {
  return "(" + fmt::text(v.x0) + ", " + fmt::text(v.x1) + ")";
}

std::string text_mat(const Mat2C& m) {
  return "[[" + fmt::text(m.m00) + ", " + fmt::text(m.m01) + "], [" + fmt::text(m.m10) + ", " +
         fmt::text(m.m11) + "]]";
}

std::string text_error(const Error& e) {
  return std::string(to_string(e.kind())) + ": " + e.what();
}

std::vector<std::string> warning_names(const VectorWarnings& w) {
  std::vector<std::string> names;
  if (w.coalescent) names.emplace_back("coalescent");
  if (w.out_of_domain) names.emplace_back("out_of_domain");
  return names;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& opt, std::ostream& out) {
  const HamiltonianParams p = required_params(opt);
  const Spectrum spec = spectrum(p);
  switch (parse_format(opt.format)) {
    case Format::Text:
      out << text_params(p) << '\n'
          << "s = " << fmt::text(spec.s) << '\n'
          << "E- = " << fmt::text(spec.e_minus) << '\n'
          << "E+ = " << fmt::text(spec.e_plus) << '\n'
          << "phase = " << to_string(spec.phase) << '\n';
      break;
    case Format::Json: {
      Json j{{"params", jparams(p)},
             {"s", jcomplex(spec.s)},
             {"e_minus", jcomplex(spec.e_minus)},
             {"e_plus", jcomplex(spec.e_plus)},
             {"phase", to_string(spec.phase)}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "a,b,c,re_s,im_s,re_e_minus,im_e_minus,re_e_plus,im_e_plus,phase\n"
          << fmt::exact(p.a) << ',' << fmt::exact(p.b) << ',' << fmt::exact(p.c) << ','
          << fmt::exact(spec.s.real()) << ',' << fmt::exact(spec.s.imag()) << ','
          << fmt::exact(spec.e_minus.real()) << ',' << fmt::exact(spec.e_minus.imag()) << ','
          << fmt::exact(spec.e_plus.real()) << ',' << fmt::exact(spec.e_plus.imag()) << ','
          << to_string(spec.phase) << '\n';
      break;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- vectors

// Rows of the long-form CSV used by `vectors` and `operators`.
struct CsvRows {
  std::ostringstream body;

  void complex_row(const std::string& prefix, const std::string& component, Complex z) {
    body << prefix << ',' << component << ',' << fmt::exact(z.real()) << ','
         << fmt::exact(z.imag()) << ",\n";
  }
  void note_row(const std::string& prefix, const std::string& note) {
    body << prefix << ",,,," << fmt::csv_field(note) << '\n';
  }
};

int cmd_vectors(const Options& opt, std::ostream& out) {
  const HamiltonianParams p = required_params(opt);

  std::optional<LegacyBasis> legacy;
  std::optional<Error> legacy_err;
  try {
    legacy = legacy_vectors(p);
  } catch (const Error& e) {
    legacy_err = e;
  }
  std::optional<CorrectedBasis> corrected;
  std::optional<Error> corrected_err;
  try {
    corrected = corrected_vectors(p);
  } catch (const Error& e) {
    corrected_err = e;
  }

  switch (parse_format(opt.format)) {
    case Format::Text: {
      out << text_params(p) << '\n';
      out << "legacy basis:\n";
      if (legacy) {
        const auto w = warning_names(legacy->warnings);
        out << "  r = " << fmt::text(legacy->r) << '\n'
            << "  psi- = " << text_vec(legacy->psi_minus) << '\n'
            << "  psi+ = " << text_vec(legacy->psi_plus) << '\n'
            << "  warnings: " << (w.empty() ? "none" : join(w, ", ")) << '\n';
      } else {
        out << "  " << text_error(*legacy_err) << '\n';
      }
      out << "corrected basis:\n";
      if (corrected) {
        const auto w = warning_names(corrected->warnings);
        out << "  R+ = " << fmt::text(corrected->r_plus) << '\n'
            << "  R- = " << fmt::text(corrected->r_minus) << '\n'
            << "  phi- = " << text_vec(corrected->phi_minus) << '\n'
            << "  phi+ = " << text_vec(corrected->phi_plus) << '\n'
            << "  warnings: " << (w.empty() ? "none" : join(w, ", ")) << '\n';
      } else {
        out << "  " << text_error(*corrected_err) << '\n';
      }
      break;
    }
    case Format::Json: {
      Json j{{"params", jparams(p)}};
      if (legacy) {
        j["legacy"] = Json{{"r", jcomplex(legacy->r)},
                           {"psi_minus", jvec(legacy->psi_minus)},
                           {"psi_plus", jvec(legacy->psi_plus)},
                           {"warnings", warning_names(legacy->warnings)}};
      } else {
        j["legacy"] = jerror(*legacy_err);
      }
      if (corrected) {
        j["corrected"] = Json{{"r_plus", jcomplex(corrected->r_plus)},
                              {"r_minus", jcomplex(corrected->r_minus)},
                              {"phi_minus", jvec(corrected->phi_minus)},
                              {"phi_plus", jvec(corrected->phi_plus)},
                              {"warnings", warning_names(corrected->warnings)}};
      } else {
        j["corrected"] = jerror(*corrected_err);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      CsvRows rows;
      if (legacy) {
        rows.complex_row("legacy,r", "", legacy->r);
        rows.complex_row("legacy,psi_minus", "0", legacy->psi_minus.x0);
        rows.complex_row("legacy,psi_minus", "1", legacy->psi_minus.x1);
        rows.complex_row("legacy,psi_plus", "0", legacy->psi_plus.x0);
        rows.complex_row("legacy,psi_plus", "1", legacy->psi_plus.x1);
        for (const auto& w : warning_names(legacy->warnings)) rows.note_row("legacy,warning", w);
      } else {
        rows.note_row("legacy,error", text_error(*legacy_err));
      }
      if (corrected) {
        rows.complex_row("corrected,r_plus", "", corrected->r_plus);
        rows.complex_row("corrected,r_minus", "", corrected->r_minus);
        rows.complex_row("corrected,phi_minus", "0", corrected->phi_minus.x0);
        rows.complex_row("corrected,phi_minus", "1", corrected->phi_minus.x1);
        rows.complex_row("corrected,phi_plus", "0", corrected->phi_plus.x0);
        rows.complex_row("corrected,phi_plus", "1", corrected->phi_plus.x1);
        for (const auto& w : warning_names(corrected->warnings)) {
          rows.note_row("corrected,warning", w);
        }
      } else {
        rows.note_row("corrected,error", text_error(*corrected_err));
      }
      out << "section,quantity,component,re,im,note\n" << rows.body.str();
      break;
    }
  }
  return kExitOk;
}

// --------------------------------------------------------------- operators

struct NamedOperator {
  std::string name;
  std::optional<AntilinearOp> op;
  std::optional<Error> error;
};

std::vector<NamedOperator> collect_operators(const HamiltonianParams& p) {
  const auto linear = [](const Mat2C& m) { return AntilinearOp{m, false}; };
  const std::vector<std::pair<std::string, std::function<AntilinearOp()>>> builders = {
      {"H", [&] { return linear(build_hamiltonian(p)); }},
      {"C_Z", [&] { return linear(legacy_c_operator(p)); }},
      {"C_B", [&] { return linear(c_operator(p)); }},
      {"P", [&] { return linear(parity()); }},
      {"T", [] { return time_reversal(); }},
      {"PT", [] { return pt_operator(); }},
      {"CPT", [&] { return cpt_operator(p); }},
  };
  std::vector<NamedOperator> ops;
  for (const auto& [name, build] : builders) {
    try {
      ops.push_back({name, build(), std::nullopt});
    } catch (const Error& e) {
      ops.push_back({name, std::nullopt, e});
    }
  }
  return ops;
}

int cmd_operators(const Options& opt, std::ostream& out) {
  const HamiltonianParams p = required_params(opt);
  const std::vector<NamedOperator> ops = collect_operators(p);

  switch (parse_format(opt.format)) {
    case Format::Text:
      out << text_params(p) << '\n';
      for (const auto& named : ops) {
        out << named.name << " = ";
        if (named.op) {
          out << text_mat(named.op->m) << (named.op->conjugates ? " K" : "") << '\n';
        } else {
          out << "n/a (" << text_error(*named.error) << ")\n";
        }
      }
      break;
    case Format::Json: {
      Json jops = Json::object();
      for (const auto& named : ops) {
        if (named.op) {
          jops[named.name] = Json{{"matrix", jmat(named.op->m)},
                                  {"antilinear", named.op->conjugates}};
        } else {
          jops[named.name] = jerror(*named.error);
        }
      }
      out << Json{{"params", jparams(p)}, {"operators", jops}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "operator,antilinear,row,col,re,im,note\n";
      for (const auto& named : ops) {
        if (!named.op) {
          out << named.name << ",,,,,," << fmt::csv_field(text_error(*named.error)) << '\n';
          continue;
        }
        const Mat2C& m = named.op->m;
        const Complex entries[2][2] = {{m.m00, m.m01}, {m.m10, m.m11}};
        for (int i = 0; i < 2; ++i) {
          for (int k = 0; k < 2; ++k) {
            out << named.name << ',' << (named.op->conjugates ? "true" : "false") << ',' << i
                << ',' << k << ',' << fmt::exact(entries[i][k].real()) << ','
                << fmt::exact(entries[i][k].imag()) << ",\n";
          }
        }
      }
      break;
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const Options& opt, std::ostream& out) {
  const HamiltonianParams p = required_params(opt);
  if (!std::isfinite(opt.tol_eq) || opt.tol_eq < 0.0) {
    throw UsageError{"--tol-eq must be finite and non-negative"};
  }
  if (!std::isfinite(opt.tol_ineq) || opt.tol_ineq < 0.0) {
    throw UsageError{"--tol-ineq must be finite and non-negative"};
  }
  const BatteryResult result = run_battery(p, opt.tol_eq, opt.tol_ineq);
  const int code = battery_verdict(result);

  switch (parse_format(opt.format)) {
    case Format::Text: {
      out << text_params(p) << '\n' << "phase: " << to_string(result.phase) << '\n';
      char line[160];
      std::snprintf(line, sizeof line, "%-7s %-15s %-13s %-13s %-8s %s\n", "id", "kind",
                    "residual", "threshold", "verdict", "note");
      out << line;
      for (const CheckReport& r : result.checks) {
        std::snprintf(line, sizeof line, "%-7s %-15s %-13s %-13s %-8s ", r.claim_id.c_str(),
                      std::string(to_string(r.kind)).c_str(), fmt::text(r.residual).c_str(),
                      fmt::text(r.threshold).c_str(), std::string(to_string(r.verdict)).c_str());
        std::string row = line + r.note;
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out << row << '\n';
      }
      out << "result: "
          << (code == kExitOk ? "all verdicts as expected" : "verdict mismatch") << '\n';
      break;
    }
    case Format::Json: {
      Json checks = Json::array();
      for (const CheckReport& r : result.checks) {
        checks.push_back(Json{{"id", r.claim_id},
                              {"kind", to_string(r.kind)},
                              {"residual", jnum(r.residual)},
                              {"threshold", jnum(r.threshold)},
                              {"verdict", to_string(r.verdict)},
                              {"note", r.note}});
      }
      Json j{{"params", jparams(p)}, {"phase", to_string(result.phase)}, {"checks", checks}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "id,kind,residual,threshold,verdict,note\n";
      for (const CheckReport& r : result.checks) {
        out << r.claim_id << ',' << to_string(r.kind) << ',' << fmt::exact(r.residual) << ','
            << fmt::exact(r.threshold) << ',' << to_string(r.verdict) << ','
            << fmt::csv_field(r.note) << '\n';
      }
      break;
  }
  return code;
}

// -------------------------------------------------------------------- scan

int cmd_scan(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto sweep = parse_sweep_param(opt.sweep);
  if (!sweep) throw UsageError{"--sweep must be one of a, b, c"};
  if (!opt.from || !opt.to || !opt.steps) throw UsageError{"scan needs --from, --to and --steps"};
  if (!std::isfinite(*opt.from) || !std::isfinite(*opt.to) || !(*opt.from < *opt.to)) {
    throw UsageError{"scan range must satisfy --from < --to"};
  }
  if (*opt.steps < 2) throw UsageError{"--steps must be at least 2"};

  // The swept parameter's own flag is optional and ignored.
  HamiltonianParams base;
  for (const SweepParam param : {SweepParam::A, SweepParam::B, SweepParam::C}) {
    if (param == *sweep) continue;
    const auto& value = param == SweepParam::A ? opt.a : param == SweepParam::B ? opt.b : opt.c;
    const std::string flag = "--" + std::string(to_string(param));
    base = with_value(base, param, require_finite(value, flag.c_str()));
  }

  const ScanResult result = scan(base, *sweep, *opt.from, *opt.to, *opt.steps);
  const std::string name(to_string(*sweep));

  switch (parse_format(opt.format)) {
    case Format::Text: {
      out << "sweep " << name << " over [" << fmt::text(*opt.from) << ", " << fmt::text(*opt.to)
          << "], " << *opt.steps << " steps";
      for (const SweepParam param : {SweepParam::A, SweepParam::B, SweepParam::C}) {
        if (param == *sweep) continue;
        const double v = param == SweepParam::A ? base.a : param == SweepParam::B ? base.b : base.c;
        out << ", " << to_string(param) << '=' << fmt::text(v);
      }
      out << '\n';
      char line[160];
      std::snprintf(line, sizeof line, "%-13s %-27s %-27s %-12s %s\n", name.c_str(), "E-", "E+",
                    "phase", "comm_residual");
      out << line;
      for (const ScanRow& row : result.rows) {
        std::snprintf(line, sizeof line, "%-13s %-27s %-27s %-12s %s\n",
                      fmt::text(row.value).c_str(), fmt::text(row.e_minus).c_str(),
                      fmt::text(row.e_plus).c_str(), std::string(to_string(row.phase)).c_str(),
                      fmt::text(row.comm_residual).c_str());
        out << line;
      }
      if (result.exceptional_points.empty()) {
        out << "no exceptional point in range\n";
      }
      for (const double x : result.exceptional_points) {
        out << "exceptional point at " << name << " = " << fmt::exact(x) << '\n';
      }
      break;
    }
    case Format::Json: {
      Json fixed = Json::object();
      for (const SweepParam param : {SweepParam::A, SweepParam::B, SweepParam::C}) {
        if (param == *sweep) continue;
        const double v = param == SweepParam::A ? base.a : param == SweepParam::B ? base.b : base.c;
        fixed[std::string(to_string(param))] = jnum(v);
      }
      Json rows = Json::array();
      for (const ScanRow& row : result.rows) {
        rows.push_back(Json{{"param", jnum(row.value)},
                            {"re_e_minus", jnum(row.e_minus.real())},
                            {"im_e_minus", jnum(row.e_minus.imag())},
                            {"re_e_plus", jnum(row.e_plus.real())},
                            {"im_e_plus", jnum(row.e_plus.imag())},
                            {"phase", to_string(row.phase)},
                            {"comm_residual", jnum(row.comm_residual)}});
      }
      Json eps = Json::array();
      for (const double x : result.exceptional_points) eps.push_back(jnum(x));
      Json j{{"sweep", name}, {"fixed", fixed}, {"rows", rows}, {"exceptional_points", eps}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "param,re_e_minus,im_e_minus,re_e_plus,im_e_plus,phase,comm_residual\n";
      for (const ScanRow& row : result.rows) {
        out << fmt::exact(row.value) << ',' << fmt::exact(row.e_minus.real()) << ','
            << fmt::exact(row.e_minus.imag()) << ',' << fmt::exact(row.e_plus.real()) << ','
            << fmt::exact(row.e_plus.imag()) << ',' << to_string(row.phase) << ','
            << fmt::exact(row.comm_residual) << '\n';
      }
      // CSV stays rectangular; crossings go to the diagnostic stream.
      for (const double x : result.exceptional_points) {
        err << "# exceptional point: " << name << '=' << fmt::exact(x) << '\n';
      }
      break;
  }
  return kExitOk;
}

void add_param_flags(CLI::App* sub, Options& opt, bool required) {
  auto* a = sub->add_option("--a", opt.a, "shift a (real)");
  auto* b = sub->add_option("--b", opt.b, "coupling b (real)");
  auto* c = sub->add_option("--c", opt.c, "splitting c (real)");
  if (required) {
    a->required();
    b->required();
    c->required();
  }
}

void add_format_flag(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Two-level pseudo-Hermitian Hamiltonian toolkit and claim battery", "ptsym"};
  app.require_subcommand(1);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and PT phase");
  add_param_flags(spectrum_cmd, opt, true);
  add_format_flag(spectrum_cmd, opt);

  auto* vectors_cmd = app.add_subcommand("vectors", "legacy and corrected eigenvector families");
  add_param_flags(vectors_cmd, opt, true);
  add_format_flag(vectors_cmd, opt);

  auto* operators_cmd = app.add_subcommand("operators", "H, C, P, T, PT and CPT operators");
  add_param_flags(operators_cmd, opt, true);
  add_format_flag(operators_cmd, opt);

  auto* verify_cmd = app.add_subcommand("verify", "run the claim battery");
  add_param_flags(verify_cmd, opt, true);
  add_format_flag(verify_cmd, opt);
  verify_cmd->add_option("--tol-eq", opt.tol_eq, "equality tolerance");
  verify_cmd->add_option("--tol-ineq", opt.tol_ineq, "inequality threshold");

  auto* scan_cmd = app.add_subcommand("scan", "sweep one parameter across the phase diagram");
  add_param_flags(scan_cmd, opt, false);
  add_format_flag(scan_cmd, opt);
  scan_cmd->add_option("--sweep", opt.sweep, "swept parameter")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  scan_cmd->add_option("--from", opt.from, "range start")->required();
  scan_cmd->add_option("--to", opt.to, "range end")->required();
  scan_cmd->add_option("--steps", opt.steps, "grid points (>= 2)")->required();

  try {
    // CLI11 consumes the argument vector back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(opt, out);
    if (*vectors_cmd) return cmd_vectors(opt, out);
    if (*operators_cmd) return cmd_operators(opt, out);
    if (*verify_cmd) return cmd_verify(opt, out);
    if (*scan_cmd) return cmd_scan(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << text_error(e) << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ptsym::cli
