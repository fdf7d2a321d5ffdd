#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "csdirac/cli.hpp"
#include "csdirac/spectrum.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace csdirac;

namespace {

int run_cli(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"csdirac"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(store.size());
  for (const auto& s : store) argv.push_back(s.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  return out;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum emits the documented CSV table") {
    TempFile tmp("spectrum.csv");
    CHECK(run_cli({"spectrum", "--nrmax", "5", "--csv", "--out", tmp.path}) == 0);
    const auto rows = lines_of(slurp(tmp.path));
    REQUIRE(rows.size() == 7);  // header + 6 levels
    CHECK(rows[0] == "n_r,gamma,alpha,epsilon,E_plus,E_minus,valid,reason");

    // first data row must round-trip the library values exactly
    const model::ModelParams params{1.0, 2.0, 0.75, 0.8, 0.3};
    const auto qn = model::make_quantum_numbers(1, 0.6, +1, 0);
    const auto level = spectrum::energy_level(params, qn, +1);
    std::istringstream row(rows[1]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(field == "0");
    std::getline(row, field, ',');
    CHECK(std::stod(field) == level.gamma);
    std::getline(row, field, ',');
    CHECK(std::stod(field) == level.alpha);
    std::getline(row, field, ',');
    CHECK(std::stod(field) == level.epsilon);
    std::getline(row, field, ',');
    CHECK(std::stod(field) == level.E);
  }

  TEST_CASE("spectrum JSON carries both roots and a schema tag") {
    TempFile tmp("spectrum.json");
    CHECK(run_cli({"spectrum", "--nrmax", "1", "--out", tmp.path}) == 0);
    const auto doc = nlohmann::json::parse(slurp(tmp.path));
    CHECK(doc.at("schema") == 1);
    REQUIRE(doc.at("levels").size() == 2);
    const auto& lv = doc.at("levels")[0];
    CHECK(lv.at("valid") == true);
    CHECK(lv.at("E_minus").get<double>() == -lv.at("E_plus").get<double>());
  }

  TEST_CASE("identical invocations produce identical bytes") {
    TempFile a("det_a.csv"), b("det_b.csv");
    CHECK(run_cli({"spectrum", "--nrmax", "3", "--csv", "--out", a.path}) == 0);
    CHECK(run_cli({"spectrum", "--nrmax", "3", "--csv", "--out", b.path}) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
  }

  TEST_CASE("flat config files feed the model and flags win") {
    TempFile cfg("flat.cfg"), out("flat.csv");
    {
      std::ofstream f(cfg.path);
      f << "# comment line\n"
        << "M = 1.25\n"
        << "omega = 1.5   # trailing comment\n"
        << "m = 2\n";
    }
    CHECK(run_cli({"spectrum", "--config", cfg.path, "--nrmax", "0", "--csv", "--out",
                   out.path}) == 0);
    model::ModelParams params{1.25, 1.5, 0.75, 0.8, 0.3};
    const auto qn = model::make_quantum_numbers(2, 0.6, +1, 0);
    const auto level = spectrum::energy_level(params, qn, +1);
    auto rows = lines_of(slurp(out.path));
    REQUIRE(rows.size() == 2);
    std::istringstream data(rows[1]);
    std::string field;
    std::getline(data, field, ',');  // n_r
    std::getline(data, field, ',');
    CHECK(std::stod(field) == level.gamma);

    // an explicit flag overrides the file value
    TempFile out2("flat2.csv");
    CHECK(run_cli({"spectrum", "--config", cfg.path, "--M", "1.0", "--nrmax", "0", "--csv",
                   "--out", out2.path}) == 0);
    CHECK(slurp(out.path) != slurp(out2.path));
  }

  TEST_CASE("JSON config files work and unknown keys are rejected") {
    TempFile cfg("conf.json"), out("conf.csv");
    {
      std::ofstream f(cfg.path);
      f << "{\"M\": 1.25, \"omega\": 1.5, \"m\": 2}\n";
    }
    CHECK(run_cli({"spectrum", "--config", cfg.path, "--nrmax", "0", "--csv", "--out",
                   out.path}) == 0);

    TempFile bad("bad.cfg");
    {
      std::ofstream f(bad.path);
      f << "Mass = 2.0\n";
    }
    CHECK(run_cli({"spectrum", "--config", bad.path}) == 2);

    TempFile badj("bad.json");
    {
      std::ofstream f(badj.path);
      f << "{\"M\": \"heavy\"}";
    }
    CHECK(run_cli({"spectrum", "--config", badj.path}) == 2);
    CHECK(run_cli({"spectrum", "--config", "does_not_exist.cfg"}) == 2);
  }

  TEST_CASE("wavefunction emits the requested grid") {
    TempFile out("wf.csv");
    CHECK(run_cli({"wavefunction", "--nr", "1", "--rmax", "5", "--points", "10", "--out",
                   out.path}) == 0);
    const auto rows = lines_of(slurp(out.path));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == "r,F,G,F_plus,G_minus");
    CHECK(rows[10].substr(0, 2) == "5,");  // last radius is rmax

    TempFile full("wf_full.csv");
    CHECK(run_cli({"wavefunction", "--points", "4", "--full", "--phi", "0.5", "--out",
                   full.path}) == 0);
    const auto frows = lines_of(slurp(full.path));
    CHECK(frows[0] ==
          "r,F,G,F_plus,G_minus,psi1_re,psi1_im,psi2_re,psi2_im,psi3_re,psi3_im,"
          "psi4_re,psi4_im");
  }

  TEST_CASE("wavefunction reports unbound configurations as parameter errors") {
    CHECK(run_cli({"wavefunction", "--s1", "0"}) == 2);
    CHECK(run_cli({"wavefunction", "--k", "0"}) == 2);
  }

  TEST_CASE("coherent profiles cover both evaluation modes") {
    TempFile closed("coh_closed.csv"), series("coh_series.csv");
    CHECK(run_cli({"coherent", "--xi", "0.3", "--points", "6", "--rmax", "4", "--out",
                   closed.path}) == 0);
    CHECK(run_cli({"coherent", "--xi", "0.3", "--points", "6", "--rmax", "4", "--mode",
                   "series", "--out", series.path}) == 0);
    const auto crows = lines_of(slurp(closed.path));
    REQUIRE(crows.size() == 7);
    CHECK(crows[0] == "r,F_coh,G_coh,F_plus,G_minus");
    // the two modes agree to printed precision on the shared grid
    const auto srows = lines_of(slurp(series.path));
    for (int i = 1; i <= 6; ++i) {
      std::istringstream ca(crows[static_cast<size_t>(i)]), cb(srows[static_cast<size_t>(i)]);
      std::string fa, fb;
      for (int c = 0; c < 3; ++c) {
        std::getline(ca, fa, ',');
        std::getline(cb, fb, ',');
        CHECK(std::stod(fa) == doctest::Approx(std::stod(fb)).epsilon(1e-9));
      }
    }
    CHECK(run_cli({"coherent", "--xi", "1.5"}) == 2);
  }

  TEST_CASE("clifford reports a machine-zero residual as JSON") {
    TempFile out("clifford.json");
    CHECK(run_cli({"clifford", "--rho", "0.6", "--r", "1.7", "--phi", "0.9", "--out",
                   out.path}) == 0);
    const auto doc = nlohmann::json::parse(slurp(out.path));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("residual").get<double>() < 1e-12);
    CHECK(doc.at("gamma_phi").size() == 4);
    CHECK(doc.at("tetrad")[1][1].get<double>() == doctest::Approx(std::cos(0.9)));
    CHECK(run_cli({"clifford", "--rho", "0"}) == 2);
  }

  TEST_CASE("verify specfun passes and flags the documented divergence") {
    TempFile out("verify_specfun.json");
    CHECK(run_cli({"verify", "specfun", "--out", out.path}) == 0);
    const auto doc = nlohmann::json::parse(slurp(out.path));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("suite") == "specfun");
    CHECK(doc.at("pass") == true);
    bool divergence_flagged = false;
    for (const auto& row : doc.at("checks"))
      if (row.at("check").get<std::string>().find("disagrees") != std::string::npos) {
        divergence_flagged = true;
        CHECK(row.at("pass") == true);
        CHECK(row.contains("note"));
        CHECK(row.at("residual").get<double>() > 0.1);
      }
    CHECK(divergence_flagged);
  }

  TEST_CASE("verify clifford emits CSV rows on request") {
    TempFile out("verify_clifford.csv");
    CHECK(run_cli({"verify", "clifford", "--csv", "--out", out.path}) == 0);
    const auto rows = lines_of(slurp(out.path));
    CHECK(rows[0] == "check,residual,tolerance,pass,note");
    REQUIRE(rows.size() >= 3);
    CHECK(rows[1].find("true") != std::string::npos);
  }

  TEST_CASE("verify spectrum prints the oracle table in CSV form") {
    TempFile out("verify_spectrum.csv");
    CHECK(run_cli({"verify", "spectrum", "--nrmax", "0", "--csv", "--out", out.path}) == 0);
    const auto rows = lines_of(slurp(out.path));
    CHECK(rows[0] ==
          "n_r,epsilon_algebraic,epsilon_numeric,relative_gap,eigenvector_overlap,"
          "valid,reason");
    REQUIRE(rows.size() == 2);
    std::istringstream row(rows[1]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(field == "0");
    std::getline(row, field, ',');
    const double eps_alg = std::stod(field);
    std::getline(row, field, ',');
    const double eps_num = std::stod(field);
    CHECK(std::abs(eps_alg - eps_num) / eps_alg < 1e-5);
  }

  TEST_CASE("verify rejects the undefined-norm rest frame upfront") {
    CHECK(run_cli({"verify", "spectrum", "--k", "0"}) == 2);
    CHECK(run_cli({"verify", "coherent", "--k", "0"}) == 2);
  }

  TEST_CASE("bad invocations exit with the parameter-error code") {
    CHECK(run_cli({"spectrum", "--no-such-flag"}) == 2);
    CHECK(run_cli({"no_such_command"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"verify"}) == 2);
    CHECK(run_cli({"coherent", "--mode", "resummed"}) == 2);
    CHECK(run_cli({"spectrum", "--s", "2"}) == 2);
  }
}
