#include "csdirac/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csdirac/coherent.hpp"
#include "csdirac/geometry.hpp"
#include "csdirac/model.hpp"
#include "csdirac/radial_states.hpp"
#include "csdirac/spectrum.hpp"
#include "csdirac/verify.hpp"

namespace csdirac::cli {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  model::ModelParams params{1.0, 2.0, 0.75, 0.8, 0.3};
  int m = 1;
  double k = 0.6;
  int s = +1;
  int n_r = 0;
};

struct Overrides {
  std::string config_path;
  std::optional<double> M, omega, rho, s1, s2, k;
  std::optional<int> m, s, n_r;
};

double parse_double(const std::string& key, const std::string& raw) {
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(raw, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: value for '" + key + "' is not a number: " + raw);
  }
  while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
  if (pos != raw.size())
    throw ConfigError("config: value for '" + key + "' is not a number: " + raw);
  return v;
}

int parse_int(const std::string& key, const std::string& raw) {
  const double v = parse_double(key, raw);
  const int i = static_cast<int>(std::lround(v));
  if (v != static_cast<double>(i))
    throw ConfigError("config: value for '" + key + "' must be an integer: " + raw);
  return i;
}

void apply_key(Inputs& in, const std::string& key, const std::string& raw) {
  if (key == "M")
    in.params.M = parse_double(key, raw);
  else if (key == "omega")
    in.params.omega = parse_double(key, raw);
  else if (key == "rho")
    in.params.rho = parse_double(key, raw);
  else if (key == "s1")
    in.params.s1 = parse_double(key, raw);
  else if (key == "s2")
    in.params.s2 = parse_double(key, raw);
  else if (key == "k")
    in.k = parse_double(key, raw);
  else if (key == "m")
    in.m = parse_int(key, raw);
  else if (key == "s")
    in.s = parse_int(key, raw);
  else if (key == "n_r")
    in.n_r = parse_int(key, raw);
  else
    throw ConfigError("config: unknown key '" + key + "'");
}

std::string trimmed(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void parse_flat_config(Inputs& in, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: expected key=value, got: " + line);
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config: expected key=value, got: " + line);
    apply_key(in, key, value);
  }
}

void parse_json_config(Inputs& in, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: JSON root must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number())
      throw ConfigError("config: value for '" + key + "' must be a number");
    if (key == "m" || key == "s" || key == "n_r") {
      if (!value.is_number_integer())
        throw ConfigError("config: value for '" + key + "' must be an integer");
      apply_key(in, key, std::to_string(value.get<long long>()));
    } else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
      apply_key(in, key, buf);
    }
  }
}

Inputs resolve_inputs(const Overrides& ov) {
  Inputs in;
  if (!ov.config_path.empty()) {
    std::ifstream file(ov.config_path);
    if (!file) throw ConfigError("config: cannot read file: " + ov.config_path);
    std::ostringstream buf;
    buf << file.rdbuf();
    const std::string text = buf.str();
    size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
      ++first;
    if (first < text.size() && text[first] == '{')
      parse_json_config(in, text);
    else
      parse_flat_config(in, text);
  }
  if (ov.M) in.params.M = *ov.M;
  if (ov.omega) in.params.omega = *ov.omega;
  if (ov.rho) in.params.rho = *ov.rho;
  if (ov.s1) in.params.s1 = *ov.s1;
  if (ov.s2) in.params.s2 = *ov.s2;
  if (ov.k) in.k = *ov.k;
  if (ov.m) in.m = *ov.m;
  if (ov.s) in.s = *ov.s;
  if (ov.n_r) in.n_r = *ov.n_r;
  return in;
}

model::QuantumNumbers quantum_numbers(const Inputs& in) {
  return model::make_quantum_numbers(in.m, in.k, in.s, in.n_r);
}

// ---- deterministic output helpers ----------------------------------------

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_number(double v) {
  // JSON has no NaN literal; absent energies become null
  if (std::isnan(v)) return "null";
  return fmt17(v);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string joined_reasons(const std::vector<std::string>& reasons) {
  std::string out;
  for (const auto& r : reasons) {
    if (!out.empty()) out += "; ";
    out += r;
  }
  return out;
}

int emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return 2;
  }
  file << body;
  return 0;
}

void append_matrix(std::string& out, const geometry::Mat4& m) {
  out += "[";
  for (int i = 0; i < 4; ++i) {
    out += (i ? ",[" : "[");
    for (int j = 0; j < 4; ++j) {
      const auto z = geometry::at(m, i, j);
      out += (j ? ",[" : "[");
      out += json_number(z.real());
      out += ",";
      out += json_number(z.imag());
      out += "]";
    }
    out += "]";
  }
  out += "]";
}

void append_check_rows(std::string& out, const CheckList& rows) {
  out += "[";
  bool first = true;
  for (const auto& row : rows) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"check\":\"" + json_escape(row.check) + "\"";
    out += ",\"residual\":" + json_number(row.residual);
    out += ",\"tolerance\":" + json_number(row.tolerance);
    out += std::string(",\"pass\":") + (row.pass ? "true" : "false");
    if (!row.note.empty()) out += ",\"note\":\"" + json_escape(row.note) + "\"";
    out += "}";
  }
  out += "\n  ]";
}

// ---- subcommand bodies ----------------------------------------------------

struct SpectrumArgs {
  Overrides ov;
  int nrmax = 5;
  bool csv = false;
  std::string out_path;
};

int cmd_spectrum(const SpectrumArgs& args) {
  const Inputs in = resolve_inputs(args.ov);
  const auto qn = quantum_numbers(in);
  std::vector<spectrum::EnergyLevel> plus, minus;
  for (int n_r = 0; n_r <= args.nrmax; ++n_r) {
    auto qi = qn;
    qi.n_r = n_r;
    plus.push_back(spectrum::energy_level(in.params, qi, +1));
    minus.push_back(spectrum::energy_level(in.params, qi, -1));
  }
  std::string out;
  if (args.csv) {
    out += "n_r,gamma,alpha,epsilon,E_plus,E_minus,valid,reason\n";
    for (size_t i = 0; i < plus.size(); ++i) {
      const auto& lv = plus[i];
      out += std::to_string(lv.qn.n_r) + "," + fmt17(lv.gamma) + "," + fmt17(lv.alpha) +
             "," + fmt17(lv.epsilon) + "," + fmt17(lv.E) + "," + fmt17(minus[i].E) + "," +
             (lv.valid ? "true" : "false") + "," + csv_field(joined_reasons(lv.reasons)) +
             "\n";
    }
  } else {
    out += "{\n  \"schema\": 1,\n  \"levels\": [";
    for (size_t i = 0; i < plus.size(); ++i) {
      const auto& lv = plus[i];
      out += i ? ",\n" : "\n";
      out += "    {\"n_r\":" + std::to_string(lv.qn.n_r);
      out += ",\"gamma\":" + json_number(lv.gamma);
      out += ",\"alpha\":" + json_number(lv.alpha);
      out += ",\"epsilon\":" + json_number(lv.epsilon);
      out += ",\"E_plus\":" + json_number(lv.E);
      out += ",\"E_minus\":" + json_number(minus[i].E);
      out += std::string(",\"valid\":") + (lv.valid ? "true" : "false");
      out += ",\"reason\":\"" + json_escape(joined_reasons(lv.reasons)) + "\"}";
    }
    out += "\n  ]\n}\n";
  }
  return emit(out, args.out_path);
}

struct WavefunctionArgs {
  Overrides ov;
  std::optional<int> nr;
  double rmax = 0.0;
  int points = 400;
  bool full = false;
  double t = 0.0, phi = 0.0, z = 0.0;
  bool json = false;
  std::string out_path;
};

int cmd_wavefunction(const WavefunctionArgs& args) {
  auto ov = args.ov;
  if (args.nr) ov.n_r = *args.nr;
  const Inputs in = resolve_inputs(ov);
  const auto qn = quantum_numbers(in);
  const auto level = spectrum::energy_level(in.params, qn, +1);
  if (!level.valid) {
    std::cerr << "no bound state for these inputs: " << joined_reasons(level.reasons)
              << "\n";
    return 2;
  }
  const auto st = radial::make_radial_state(level);
  if (args.points < 2) throw ConfigError("points must be at least 2");
  const double rmax = args.rmax > 0.0 ? args.rmax : 12.0 / level.epsilon;
  std::vector<double> radii(static_cast<size_t>(args.points));
  for (int i = 0; i < args.points; ++i)
    radii[static_cast<size_t>(i)] = rmax * (i + 1) / args.points;

  std::vector<std::string> columns = {"r", "F", "G", "F_plus", "G_minus"};
  if (args.full)
    for (int c = 1; c <= 4; ++c) {
      columns.push_back("psi" + std::to_string(c) + "_re");
      columns.push_back("psi" + std::to_string(c) + "_im");
    }

  std::vector<std::vector<double>> rows;
  rows.reserve(radii.size());
  for (double r : radii) {
    std::vector<double> row = {r, st.F(r), st.G(r), st.F_plus(r), st.G_minus(r)};
    if (args.full) {
      const auto psi = radial::full_spinor(st, args.t, r, args.phi, args.z);
      for (const auto& z : psi) {
        row.push_back(z.real());
        row.push_back(z.imag());
      }
    }
    rows.push_back(std::move(row));
  }

  std::string out;
  if (args.json) {
    out += "{\n  \"schema\": 1,\n  \"level\": {";
    out += "\"n_r\":" + std::to_string(level.qn.n_r);
    out += ",\"gamma\":" + json_number(level.gamma);
    out += ",\"alpha\":" + json_number(level.alpha);
    out += ",\"epsilon\":" + json_number(level.epsilon);
    out += ",\"E\":" + json_number(level.E) + "},\n  \"columns\": [";
    for (size_t c = 0; c < columns.size(); ++c)
      out += std::string(c ? "," : "") + "\"" + columns[c] + "\"";
    out += "],\n  \"rows\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
      out += i ? ",\n" : "\n";
      out += "    [";
      for (size_t c = 0; c < rows[i].size(); ++c)
        out += std::string(c ? "," : "") + json_number(rows[i][c]);
      out += "]";
    }
    out += "\n  ]\n}\n";
  } else {
    for (size_t c = 0; c < columns.size(); ++c)
      out += std::string(c ? "," : "") + columns[c];
    out += "\n";
    for (const auto& row : rows) {
      for (size_t c = 0; c < row.size(); ++c) out += std::string(c ? "," : "") + fmt17(row[c]);
      out += "\n";
    }
  }
  return emit(out, args.out_path);
}

struct CoherentArgs {
  Overrides ov;
  double xi = 0.3;
  std::string mode = "closed";
  int truncation = 200;
  double rmax = 0.0;
  int points = 400;
  bool json = false;
  std::string out_path;
};

int cmd_coherent(const CoherentArgs& args) {
  const Inputs in = resolve_inputs(args.ov);
  const auto qn = quantum_numbers(in);
  coherent::CoherentParams cp{args.xi, in.params, qn, args.truncation};
  const auto anchor = coherent::anchor_level(cp);
  if (!anchor.valid) {
    std::cerr << "no bound anchor state for these inputs: "
              << joined_reasons(anchor.reasons) << "\n";
    return 2;
  }
  const auto mode =
      args.mode == "series" ? coherent::Mode::series : coherent::Mode::closed;
  if (args.points < 2) throw ConfigError("points must be at least 2");
  const double beta =
      anchor.epsilon * (1.0 + std::abs(args.xi)) / (1.0 - std::abs(args.xi));
  const double rmax = args.rmax > 0.0 ? args.rmax : 12.0 / beta;

  std::string out;
  std::vector<std::array<double, 5>> rows;
  rows.reserve(static_cast<size_t>(args.points));
  for (int i = 0; i < args.points; ++i) {
    const double r = rmax * (i + 1) / args.points;
    const auto pair = coherent::coherent_radial(cp, mode, r);
    const auto sp = coherent::coherent_spinor(cp, r);
    rows.push_back({r, pair.F_coh.real(), pair.G_coh.real(), sp.F_plus_coh,
                    sp.G_minus_coh});
  }
  const char* columns = "r,F_coh,G_coh,F_plus,G_minus";
  if (args.json) {
    out += "{\n  \"schema\": 1,\n  \"xi\": " + json_number(args.xi);
    out += ",\n  \"mode\": \"" + args.mode + "\"";
    out += ",\n  \"anchor\": {\"gamma\":" + json_number(anchor.gamma);
    out += ",\"epsilon\":" + json_number(anchor.epsilon);
    out += ",\"E\":" + json_number(anchor.E) + "}";
    out += ",\n  \"columns\": [\"r\",\"F_coh\",\"G_coh\",\"F_plus\",\"G_minus\"]";
    out += ",\n  \"rows\": [";
    for (size_t i = 0; i < rows.size(); ++i) {
      out += i ? ",\n" : "\n";
      out += "    [";
      for (size_t c = 0; c < rows[i].size(); ++c)
        out += std::string(c ? "," : "") + json_number(rows[i][c]);
      out += "]";
    }
    out += "\n  ]\n}\n";
  } else {
    out += columns;
    out += "\n";
    for (const auto& row : rows) {
      for (size_t c = 0; c < row.size(); ++c) out += std::string(c ? "," : "") + fmt17(row[c]);
      out += "\n";
    }
  }
  return emit(out, args.out_path);
}

struct CliffordArgs {
  double rho = 0.75;
  double r = 1.0;
  double phi = 0.0;
  std::string out_path;
};

int cmd_clifford(const CliffordArgs& args) {
  const auto frame = geometry::build_frame(args.rho, args.r, args.phi);
  const double residual = geometry::clifford_residual(frame);
  std::string out = "{\n  \"schema\": 1";
  out += ",\n  \"rho\": " + json_number(args.rho);
  out += ",\n  \"r\": " + json_number(args.r);
  out += ",\n  \"phi\": " + json_number(args.phi);
  out += ",\n  \"residual\": " + json_number(residual);
  out += ",\n  \"tetrad\": [";
  for (int a = 0; a < 4; ++a) {
    out += a ? ",[" : "[";
    for (int mu = 0; mu < 4; ++mu)
      out += std::string(mu ? "," : "") +
             json_number(frame.tetrad[static_cast<size_t>(a)][static_cast<size_t>(mu)]);
    out += "]";
  }
  out += "]";
  out += ",\n  \"metric_inverse\": [";
  for (int mu = 0; mu < 4; ++mu)
    out += std::string(mu ? "," : "") +
           json_number(frame.metric_inv[static_cast<size_t>(mu)]);
  out += "]";
  const char* names[4] = {"gamma_t", "gamma_r", "gamma_phi", "gamma_z"};
  for (int mu = 0; mu < 4; ++mu) {
    out += std::string(",\n  \"") + names[mu] + "\": ";
    append_matrix(out, frame.gammas[static_cast<size_t>(mu)]);
  }
  out += ",\n  \"spin_connection_phi\": ";
  append_matrix(out, frame.spin_connection_phi);
  out += "\n}\n";
  return emit(out, args.out_path);
}

struct VerifyArgs {
  std::string suite;
  Overrides ov;
  int nrmax = 2;
  int grid = 2048;
  bool csv = false;
  std::string out_path;
};

int cmd_verify(const VerifyArgs& args) {
  CheckList rows;
  std::vector<verify::OracleRow> table;
  bool with_table = false;
  const bool needs_scenario =
      args.suite == "spectrum" || args.suite == "su11" || args.suite == "coherent" ||
      args.suite == "all";
  verify::Scenario sc;
  if (needs_scenario) {
    const Inputs in = resolve_inputs(args.ov);
    sc = verify::Scenario{in.params, quantum_numbers(in)};
    if (in.k == 0.0 && args.suite != "su11") {
      std::cerr << "verification requires k != 0: the relativistic normalization "
                   "is undefined at k = 0\n";
      return 2;
    }
  }
  if (args.suite == "clifford") {
    rows = verify::check_clifford();
  } else if (args.suite == "specfun") {
    rows = verify::check_specfun();
  } else if (args.suite == "spectrum") {
    rows = verify::check_spectrum(sc, args.nrmax);
    table = verify::oracle_table(sc, args.nrmax);
    with_table = true;
  } else if (args.suite == "su11") {
    rows = verify::check_su11(sc, args.grid);
  } else if (args.suite == "coherent") {
    rows = verify::check_coherent(sc);
  } else {
    rows = verify::check_all(sc);
  }
  const bool ok = verify::all_pass(rows);

  std::string out;
  if (args.csv && with_table) {
    out +=
        "n_r,epsilon_algebraic,epsilon_numeric,relative_gap,eigenvector_overlap,"
        "valid,reason\n";
    for (const auto& row : table)
      out += std::to_string(row.n_r) + "," + fmt17(row.epsilon_algebraic) + "," +
             fmt17(row.epsilon_numeric) + "," + fmt17(row.relative_gap) + "," +
             fmt17(row.eigenvector_overlap) + "," + (row.valid ? "true" : "false") + "," +
             csv_field(row.reason) + "\n";
  } else if (args.csv) {
    out += "check,residual,tolerance,pass,note\n";
    for (const auto& row : rows)
      out += csv_field(row.check) + "," + fmt17(row.residual) + "," +
             fmt17(row.tolerance) + "," + (row.pass ? "true" : "false") + "," +
             csv_field(row.note) + "\n";
  } else {
    out += "{\n  \"schema\": 1,\n  \"suite\": \"" + args.suite + "\",\n";
    out += std::string("  \"pass\": ") + (ok ? "true" : "false") + ",\n  \"checks\": ";
    append_check_rows(out, rows);
    if (with_table) {
      out += ",\n  \"table\": [";
      bool first = true;
      for (const auto& row : table) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    {\"n_r\":" + std::to_string(row.n_r);
        out += ",\"epsilon_algebraic\":" + json_number(row.epsilon_algebraic);
        out += ",\"epsilon_numeric\":" + json_number(row.epsilon_numeric);
        out += ",\"relative_gap\":" + json_number(row.relative_gap);
        out += ",\"eigenvector_overlap\":" + json_number(row.eigenvector_overlap);
        out += std::string(",\"valid\":") + (row.valid ? "true" : "false");
        out += ",\"reason\":\"" + json_escape(row.reason) + "\"}";
      }
      out += "\n  ]";
    }
    out += "\n}\n";
  }
  const int emit_code = emit(out, args.out_path);
  if (emit_code != 0) return emit_code;
  return ok ? 0 : 3;
}

void add_model_options(CLI::App* sub, Overrides& ov) {
  sub->add_option("--config", ov.config_path, "config file, key=value lines or a JSON object");
  sub->add_option("--M", ov.M, "mass");
  sub->add_option("--omega", ov.omega, "magnetic frequency");
  sub->add_option("--rho", ov.rho, "deficit parameter in (0, 1]");
  sub->add_option("--s1", ov.s1, "Coulomb-type scalar strength");
  sub->add_option("--s2", ov.s2, "constant scalar shift");
  sub->add_option("--m", ov.m, "magnetic quantum number (j = m + 1/2)");
  sub->add_option("--k", ov.k, "longitudinal momentum");
  sub->add_option("--s", ov.s, "sign branch, +1 or -1");
  sub->add_option("--n_r", ov.n_r, "radial quantum number");
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "bound states, operator algebra, and coherent states of a Dirac particle "
      "on a conical-defect background"};
  app.require_subcommand(1);

  SpectrumArgs spec_args;
  auto* spec_cmd = app.add_subcommand("spectrum", "energy levels for n_r = 0..nrmax");
  add_model_options(spec_cmd, spec_args.ov);
  spec_cmd->add_option("--nrmax", spec_args.nrmax, "highest radial quantum number")
      ->check(CLI::NonNegativeNumber);
  auto* spec_csv = spec_cmd->add_flag("--csv", spec_args.csv, "CSV instead of JSON");
  spec_cmd->add_flag("--json", "JSON output (default)")->excludes(spec_csv);
  spec_cmd->add_option("--out", spec_args.out_path, "write to file instead of stdout");

  WavefunctionArgs wf_args;
  auto* wf_cmd =
      app.add_subcommand("wavefunction", "radial profiles of one bound state");
  add_model_options(wf_cmd, wf_args.ov);
  wf_cmd->add_option("--nr", wf_args.nr, "radial quantum number (overrides n_r)");
  wf_cmd->add_option("--rmax", wf_args.rmax, "largest radius (default 12/epsilon)");
  wf_cmd->add_option("--points", wf_args.points, "number of radii");
  wf_cmd->add_flag("--full", wf_args.full,
                   "append the 8 real spinor components at fixed (t, phi, z)");
  wf_cmd->add_option("--t", wf_args.t, "time for --full");
  wf_cmd->add_option("--phi", wf_args.phi, "angle for --full");
  wf_cmd->add_option("--z", wf_args.z, "axial coordinate for --full");
  auto* wf_json = wf_cmd->add_flag("--json", wf_args.json, "JSON instead of CSV");
  wf_cmd->add_flag("--csv", "CSV output (default)")->excludes(wf_json);
  wf_cmd->add_option("--out", wf_args.out_path, "write to file instead of stdout");

  CoherentArgs coh_args;
  auto* coh_cmd =
      app.add_subcommand("coherent", "coherent-state radial profiles at a given xi");
  add_model_options(coh_cmd, coh_args.ov);
  coh_cmd->add_option("--xi", coh_args.xi, "displacement parameter, |xi| < 1");
  coh_cmd->add_option("--mode", coh_args.mode, "closed or series")
      ->check(CLI::IsMember({"closed", "series"}));
  coh_cmd->add_option("--N", coh_args.truncation, "series truncation")
      ->check(CLI::PositiveNumber);
  coh_cmd->add_option("--rmax", coh_args.rmax, "largest radius (default 12/beta)");
  coh_cmd->add_option("--points", coh_args.points, "number of radii");
  auto* coh_json = coh_cmd->add_flag("--json", coh_args.json, "JSON instead of CSV");
  coh_cmd->add_flag("--csv", "CSV output (default)")->excludes(coh_json);
  coh_cmd->add_option("--out", coh_args.out_path, "write to file instead of stdout");

  CliffordArgs cl_args;
  auto* cl_cmd = app.add_subcommand(
      "clifford", "frame, gamma matrices, and anticommutator residual at one point");
  cl_cmd->add_option("--rho", cl_args.rho, "deficit parameter in (0, 1]");
  cl_cmd->add_option("--r", cl_args.r, "radius, > 0");
  cl_cmd->add_option("--phi", cl_args.phi, "angle");
  cl_cmd->add_option("--out", cl_args.out_path, "write to file instead of stdout");

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
  ver_cmd->require_subcommand(1);
  std::vector<CLI::App*> suites;
  for (const char* name : {"clifford", "specfun", "spectrum", "su11", "coherent", "all"}) {
    auto* suite = ver_cmd->add_subcommand(name, std::string("the ") + name + " checks");
    if (std::string(name) != "clifford" && std::string(name) != "specfun")
      add_model_options(suite, ver_args.ov);
    if (std::string(name) == "spectrum")
      suite->add_option("--nrmax", ver_args.nrmax, "levels compared against the oracle")
          ->check(CLI::NonNegativeNumber);
    if (std::string(name) == "su11")
      suite->add_option("--grid", ver_args.grid, "grid points for the operator checks")
          ->check(CLI::Range(256, 65536));
    auto* vcsv = suite->add_flag("--csv", ver_args.csv, "CSV instead of JSON");
    suite->add_flag("--json", "JSON output (default)")->excludes(vcsv);
    suite->add_option("--out", ver_args.out_path, "write to file instead of stdout");
    suites.push_back(suite);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spec_cmd->parsed()) return cmd_spectrum(spec_args);
    if (wf_cmd->parsed()) return cmd_wavefunction(wf_args);
    if (coh_cmd->parsed()) return cmd_coherent(coh_args);
    if (cl_cmd->parsed()) return cmd_clifford(cl_args);
    if (ver_cmd->parsed()) {
      const char* names[] = {"clifford", "specfun", "spectrum", "su11", "coherent", "all"};
      for (size_t i = 0; i < suites.size(); ++i)
        if (suites[i]->parsed()) {
          ver_args.suite = names[i];
          return cmd_verify(ver_args);
        }
    }
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand given\n";
  return 2;
}

}  // namespace csdirac::cli
