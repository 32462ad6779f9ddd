#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "malab/config.hpp"
#include "malab/csv.hpp"
#include "malab/report.hpp"
#include "malab/runner.hpp"

using namespace malab;

namespace {

RunConfig from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("seed grammar parses and round-trips") {
  const SeedSpec zero = SeedSpec::parse("zero");
  CHECK(zero.kind == SeedSpec::Kind::Zero);
  CHECK(zero.describe() == "zero");

  const SeedSpec lin = SeedSpec::parse("  linear ");
  CHECK(lin.kind == SeedSpec::Kind::Linear);

  const SeedSpec ex = SeedSpec::parse("exp -0.75");
  CHECK(ex.kind == SeedSpec::Kind::Exp);
  CHECK(ex.rate == doctest::Approx(-0.75));
  CHECK(SeedSpec::parse(ex.describe()).rate == doctest::Approx(-0.75));

  const SeedSpec poly = SeedSpec::parse("poly 0 0.25 -1e-3");
  CHECK(poly.kind == SeedSpec::Kind::Poly);
  REQUIRE(poly.coeffs.size() == 3);
  CHECK(poly.coeffs[2] == doctest::Approx(-1e-3));
  CHECK(SeedSpec::parse(poly.describe()).coeffs == poly.coeffs);

  CHECK_THROWS_AS(SeedSpec::parse(""), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("zero 1"), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("exp"), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("exp 1 2"), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("poly"), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("poly x"), ConfigError);
  CHECK_THROWS_AS(SeedSpec::parse("gaussian 1"), ConfigError);
}

TEST_CASE("seeds materialize to the advertised series") {
  const BiSeries lin = materialize(SeedSpec::parse("linear"), 8, 2.0);
  CHECK(evaluate(lin, Complex(1.0)).real() == doctest::Approx(0.5));

  const BiSeries ex = materialize(SeedSpec::parse("exp 0.5"), 24, 1.0);
  CHECK(evaluate(ex, Complex(0.2)).real() ==
        doctest::Approx(std::exp(0.1)).epsilon(1e-12));

  const BiSeries poly = materialize(SeedSpec::parse("poly 1 2"), 8, 1.0);
  CHECK(evaluate(poly, Complex(0.3)).real() == doctest::Approx(1.6));

  CHECK(max_abs_coeff(materialize(SeedSpec::parse("zero"), 8, 1.0)) == 0.0);
}

TEST_CASE("config files parse with defaults, comments, and overrides") {
  const RunConfig cfg = from_text(
      "# run everything on the wide disc\n"
      "command = curvature\n"
      "\n"
      "numeric.order = 32   # higher truncation\n"
      "numeric.radius = 2\n"
      "seeds.cylinder_f = linear\n"
      "radial.entry = case1-sqrt\n"
      "faults.b_wbar = 0.125\n");
  CHECK(cfg.command == "curvature");
  CHECK(cfg.numeric.order == 32);
  CHECK(cfg.numeric.radius == doctest::Approx(2.0));
  CHECK(cfg.numeric.tol == doctest::Approx(1e-9));  // untouched default
  CHECK(cfg.radial_entry == "case1-sqrt");
  CHECK(cfg.faults.b_wbar == doctest::Approx(0.125));
  CHECK(cfg.seeds.h.describe() == "poly 0 0.25");  // default preserved

  CHECK_THROWS_AS(from_text("command = fly\n"), ConfigError);
  CHECK_THROWS_AS(from_text("numeric.order = 2\n"), ConfigError);
  CHECK_THROWS_AS(from_text("numeric.order = twelve\n"), ConfigError);
  CHECK_THROWS_AS(from_text("numeric.grid_h = 0.7\n"), ConfigError);
  CHECK_THROWS_AS(from_text("numeric.samples = 0\n"), ConfigError);
  CHECK_THROWS_AS(from_text("numeric.tol = -1\n"), ConfigError);
  CHECK_THROWS_AS(from_text("mystery = 1\n"), ConfigError);
  CHECK_THROWS_AS(from_text("justakey\n"), ConfigError);
  CHECK_THROWS_AS(from_text("out =\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), IoError);
}

TEST_CASE("csv emits exact round-trip doubles") {
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(format_g17(2.0) == "2");

  CsvTable t;
  t.header = {"x", "y"};
  t.rows = {{0.1, 1.0}, {-2.5, 1e-300}};
  const std::string text = csv_to_string(t);
  CHECK(text == "x,y\n0.10000000000000001,1\n-2.5,1e-300\n");

  t.rows.push_back({1.0});
  CHECK_THROWS_AS(csv_to_string(t), IoError);
}

TEST_CASE("checks serialize with fixed key order and no timestamps") {
  const Check c = make_check("alpha", 0.5e-9, 1e-9);
  CHECK(c.pass);
  CHECK_FALSE(make_check("beta", 2e-9, 1e-9).pass);
  CHECK(make_check("gamma", -0.5e-9, 1e-9).pass);  // magnitude comparison
  CHECK(make_witness("delta", 3.0, 1.0).pass);
  CHECK_FALSE(make_witness("epsilon", 0.2, 1.0).pass);

  CHECK(to_json(c).dump() ==
        "{\"name\":\"alpha\",\"measured\":5e-10,\"tolerance\":1e-09,"
        "\"pass\":true}");

  const std::string echo = config_echo(default_config()).dump();
  CHECK(echo.find("time") == std::string::npos);
  CHECK(echo.find("seed_") == std::string::npos);
}

TEST_CASE("verify-flat command reports its five checks and passes") {
  RunConfig cfg = default_config();
  cfg.command = "verify-flat";
  const CommandReport rep = run_command(cfg);
  REQUIRE(rep.checks.size() == 5);
  CHECK(rep.checks[0].name == "system-defect");
  CHECK(rep.checks[1].name == "antiholo-defect");
  CHECK(rep.checks[2].name == "det-defect");
  CHECK(rep.checks[3].name == "psh");
  CHECK(rep.checks[4].name == "curvature-sup");
  CHECK(rep.pass());
  CHECK(rep.table.header.size() == 5);
  CHECK(rep.table.rows.size() == 25);

  // Same config, same bytes.
  const std::string once = render_report(rep.to_json(cfg));
  const std::string twice = render_report(run_command(cfg).to_json(cfg));
  CHECK(once == twice);
}

TEST_CASE("the fault knob turns verify-flat into a failing report") {
  RunConfig cfg = default_config();
  cfg.command = "verify-flat";
  cfg.faults.b_wbar = 0.01;
  const CommandReport rep = run_command(cfg);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.checks[0].pass);               // system defect ~ 2e-2
  CHECK(rep.checks[0].measured > 1e-3);
  CHECK_FALSE(rep.checks[4].pass);               // curvature gate refused

  std::ostringstream console;
  CHECK(run_cli(cfg, console) == 1);
  const Json parsed = Json::parse(console.str());
  CHECK(parsed["pass"] == false);
  CHECK(parsed["command"] == "verify-flat");
}

TEST_CASE("radial command filters catalog entries") {
  RunConfig cfg = default_config();
  cfg.command = "radial";
  cfg.radial_entry = "case2neg-trig";
  cfg.numeric.samples = 11;
  const CommandReport rep = run_command(cfg);
  REQUIRE(rep.checks.size() == 4);
  for (const Check& c : rep.checks) {
    CHECK(c.name.rfind("case2neg-trig:", 0) == 0);
    CHECK(c.pass);
  }
  cfg.radial_entry = "case9-unknown";
  CHECK_THROWS_AS(run_command(cfg), ConfigError);
}

TEST_CASE("picard command rejects boundary data outside the model disc") {
  RunConfig cfg = default_config();
  cfg.command = "picard";
  cfg.numeric.radius = 0.4;
  CHECK_THROWS_AS(run_command(cfg), ConfigError);
}

TEST_CASE("donaldson command validates its seed id") {
  RunConfig cfg = default_config();
  cfg.command = "donaldson";
  cfg.donaldson_seed = "imaginary";
  CHECK_THROWS_AS(run_command(cfg), ConfigError);
}

TEST_CASE("run_cli writes the report and table files") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "malab-cli-test";
  fs::remove_all(dir);
  // The writer creates missing parent directories.
  const fs::path report = dir / "nested" / "radial.json";

  RunConfig cfg = default_config();
  cfg.command = "radial";
  cfg.radial_entry = "case1-sqrt";
  cfg.numeric.samples = 5;
  cfg.out = report.string();

  std::ostringstream console;
  CHECK(run_cli(cfg, console) == 0);
  CHECK(fs::exists(report));
  CHECK(slurp(report) == console.str());

  const fs::path table = dir / "nested" / "radial.csv";
  REQUIRE(fs::exists(table));
  const std::string csv = slurp(table);
  CHECK(csv.rfind("entry,t,a,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

  fs::remove_all(dir);
}

TEST_CASE("the aggregate command covers every section and passes") {
  RunConfig cfg = default_config();
  cfg.command = "all";
  cfg.numeric.samples = 10;
  cfg.numeric.grid_h = 1.0 / 64;  // keeps the lattice work quick

  std::ostringstream console;
  CHECK(run_cli(cfg, console) == 0);
  const Json parsed = Json::parse(console.str());
  REQUIRE(parsed.contains("sections"));
  REQUIRE(parsed["sections"].size() == 7);
  const std::vector<std::string> expected = {
      "verify-flat", "verify-cylinder", "curvature", "radial",
      "donaldson",   "picard",          "appendix"};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(parsed["sections"][i]["command"] == expected[i]);
    CHECK(parsed["sections"][i]["pass"] == true);
    CHECK(parsed["sections"][i]["anchor"].is_string());
  }
  CHECK(parsed["pass"] == true);
}
