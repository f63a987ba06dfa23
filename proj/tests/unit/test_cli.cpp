#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "sgshell/errors.hpp"
#include "sgshell_cli/run.hpp"

using namespace sgshell;
namespace fs = std::filesystem;

namespace {

cli::RunConfig parse(const std::string& text, std::optional<cli::TaskKind> task = std::nullopt) {
  std::istringstream in(text);
  return cli::parse_config(in, task);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no sgshell::Error thrown");
  return ErrorKind::TaskError;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kEnergy = R"([material]
lambda = 1
mu = 1
h = 0.05
ell_s = 0.02
[geometry]
chart = cylinder
R = 1
L = 1
half_angle = 0.5
[deformation]
kind = displace
amplitude = 0.05
)";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config errors name the offending key") {
  CHECK(kind_of([] { (void)parse("", cli::TaskKind::Energy); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { (void)parse("[material]\nlambda = 1\nmu = 1\n", cli::TaskKind::Energy); }) ==
        ErrorKind::ConfigError);
  try {
    (void)parse(std::string(kEnergy) + "[numerics]\nquadrature = 4\n", cli::TaskKind::Energy);
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("numerics.quadrature") != std::string::npos);
  }
  CHECK(kind_of([] { (void)parse(std::string(kEnergy) + "[task]\nkind = converge\n", cli::TaskKind::Energy); }) ==
        ErrorKind::ConfigError);
  CHECK(kind_of([] { (void)parse("[material]\nlambda = 1\nmu = x\nh = 0.1\n", cli::TaskKind::Energy); }) ==
        ErrorKind::ConfigError);
}

TEST_CASE("model is inferred from the material keys") {
  const cli::RunConfig d = parse(kEnergy, cli::TaskKind::Energy);
  CHECK(std::holds_alternative<Dilatational>(d.material.gradient));
  const cli::RunConfig tm =
      parse("[material]\nlambda=1\nmu=1\nh=0.1\na1=0.1\na2=0.1\na3=0.1\na4=0.1\na5=0.1\n", cli::TaskKind::Energy);
  CHECK(std::holds_alternative<ToupinMindlin>(tm.material.gradient));
}

TEST_CASE("runs are deterministic and embed the resolved configuration") {
  cli::RunOptions o;
  o.write_files = false;
  const cli::RunResult a = cli::run(parse(kEnergy, cli::TaskKind::Energy), o);
  const cli::RunResult b = cli::run(parse(kEnergy, cli::TaskKind::Energy), o);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.csv == b.csv);
  CHECK(a.report["config"]["material"]["h"].get<double>() == doctest::Approx(0.05));
  CHECK(a.report["config"]["numerics"]["quad"].get<int>() == 6);
  CHECK(a.report["task"] == "energy");
}

TEST_CASE("Toupin-Mindlin resultants are a task error") {
  const cli::RunConfig c = parse("[material]\nlambda=1\nmu=1\nh=0.1\na1=0.1\na2=0.1\na3=0.1\na4=0.1\na5=0.1\n",
                                 cli::TaskKind::Resultants);
  cli::RunOptions o;
  o.write_files = false;
  try {
    (void)cli::run(c, o);
    FAIL("expected a task error");
  } catch (const std::exception& e) {
    CHECK(cli::exit_code_for(e) == cli::kExitTask);
  }
}

TEST_CASE("strict mode turns regime warnings into failures") {
  const std::string text = "[material]\nlambda=1\nmu=1\nh=0.05\nell_s=0.5\n";
  cli::RunOptions o;
  o.write_files = false;
  const cli::RunResult lax = cli::run(parse(text, cli::TaskKind::Energy), o);
  CHECK_FALSE(lax.report["warnings"].empty());
  o.strict = true;
  try {
    (void)cli::run(parse(text, cli::TaskKind::Energy), o);
    FAIL("expected RegimeViolation");
  } catch (const std::exception& e) {
    CHECK(cli::exit_code_for(e) == cli::kExitStrict);
  }
}

#ifdef SGSHELL_CLI_EXE
TEST_CASE("the executable writes byte-identical outputs and reports exit codes") {
  const fs::path dir = fs::temp_directory_path() / "sgshell_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "out");
  fs::create_directories(dir / "first");
  const fs::path cfg = dir / "roll.ini";
  std::ofstream(cfg) << "[material]\nlambda = 1\nmu = 1\nh = 0.1\nell_s = 0.05\n[task]\nexample = roll\ndraws = 2\n";
  const std::string exe = SGSHELL_CLI_EXE;
  const std::string quiet = " > " + (dir / "log.txt").string() + " 2>&1";
  const std::string cmd = exe + " example --config " + cfg.string() + " --out " + (dir / "out").string() + quiet;
  const char* files[] = {"sgshell.json", "sgshell.txt"};
  CHECK(std::system(cmd.c_str()) == 0);
  for (const char* f : files) fs::copy_file(dir / "out" / f, dir / "first" / f);
  CHECK(std::system(cmd.c_str()) == 0);
  for (const char* f : files) {
    CAPTURE(f);
    CHECK(fs::exists(dir / "out" / f));
    CHECK(slurp(dir / "out" / f) == slurp(dir / "first" / f));
  }

  const fs::path empty = dir / "empty.ini";
  std::ofstream(empty) << "";
  const int rc = std::system((exe + " energy --config " + empty.string() + quiet).c_str());
  CHECK(WEXITSTATUS(rc) == cli::kExitConfig);
  fs::remove_all(dir);
}
#endif

}
