#include <doctest.h>

#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qseries");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qseries::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::complex<double> value_of(const std::string& out) {
  std::istringstream in(out);
  double re = 0, im = 0;
  in >> re >> im;
  return {re, im};
}

std::filesystem::path scratch_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("eval theta at a zero") {
  const Result r = run({"eval", "theta", "--q", "0.5", "--x", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("converged=true") != std::string::npos);
  CHECK(std::abs(value_of(r.out)) < 1e-15);
}

TEST_CASE("eval with complex literals") {
  const Result r = run({"eval", "ramanujan", "--q", "0.5,0.1", "--a", "2,1", "--b", "0.4", "--z", "0.3,0.2"});
  CHECK(r.code == 0);
  const Result l = run({"eval", "phi", "--q", "0.4", "--a-list", "0.3;0.5,0.5", "--b-list", "-0.7,0.1",
                        "--x", "0.6,-0.3"});
  CHECK(l.code == 0);
}

TEST_CASE("resummation outside the certified domain exits 2 with a warning") {
  const Result r = run({"eval", "resum2psi1", "--q", "0.4", "--a1", "0.7", "--a2", "0.3", "--b1", "0.9",
                        "--lambda", "1.1", "--x", "2.3"});
  CHECK(r.code == 2);
  CHECK(r.out.find("converged=false") != std::string::npos);
  CHECK(r.out.find("warning=") != std::string::npos);
}

TEST_CASE("resummation inside the certified domain exits 0") {
  const Result r = run({"eval", "resum2psi1", "--q", "0.4", "--a1", "0.7", "--a2", "0.3", "--b1", "0.9",
                        "--lambda", "1,0.5", "--x", "32.36,23.51"});
  CHECK(r.code == 0);
  CHECK(r.out.find("warning=") == std::string::npos);
  const Result m = run({"eval", "main_rhs", "--q", "0.4", "--a1", "0.7", "--a2", "0.3", "--b1", "0.9",
                        "--lambda", "1,0.5", "--x", "32.36,23.51"});
  CHECK(m.code == 0);
  const std::complex<double> a = value_of(r.out), b = value_of(m.out);
  CHECK(std::abs(a - b) < 1e-11 * std::abs(b));
}

TEST_CASE("the divergent series itself is refused") {
  const Result r = run({"eval", "psi2x1", "--q", "0.4", "--a1", "0.7", "--a2", "0.3", "--b1", "0.9", "--x", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("resum2psi1") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"eval", "theta", "--q", "0.5x", "--x", "1"}).code == 1);
  CHECK(run({"eval", "theta", "--q", "0.5"}).code == 1);
  CHECK(run({"eval", "nosuch", "--q", "0.5", "--x", "1"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval", "qpochhammer", "--q", "0.5", "--a", "0.3", "--n", "2.5"}).code == 1);
  CHECK(run({"eval", "theta", "--q", "1.5", "--x", "1"}).code == 1);
  CHECK(run({"eval", "theta", "--q", "0.5", "--x", "0"}).code == 1);
  CHECK(run({"check", "nosuch", "--q", "0.5"}).code == 1);
  CHECK(run({"sweep", "--config", "/nonexistent-dir/c.json"}).code == 1);
}

TEST_CASE("qpochhammer with integer n") {
  const Result r = run({"eval", "qpochhammer", "--q", "0.5", "--a", "0.3", "--n", "-3"});
  CHECK(r.code == 0);
}

TEST_CASE("check one identity") {
  const Result r = run({"check", "ramanujan", "--q", "0.3", "--a", "0.5", "--b", "0.2", "--z", "0.65"});
  CHECK(r.code == 0);
  CHECK(r.out.find("check=ramanujan outcome=pass") != std::string::npos);
  const Result t = run({"check", "ramanujan", "--q", "0.3", "--a", "0.5", "--b", "0.2", "--z", "0.65",
                        "--tolerance", "1e-30"});
  CHECK(t.code == 1);
  const Result s = run({"check", "slater_r", "--q", "0.4", "--a-list", "2;1.5,0.5", "--b-list", "0.9;0.5",
                        "--x", "0.5,0.3"});
  CHECK(s.code == 0);
}

TEST_CASE("sweep from a config file") {
  const auto dir = scratch_dir("qseries_cli_sweep");
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "c.json";
  std::ofstream(cfg) << R"({"identity": "triple_product", "seed": 4, "random": {"count": 5},
                           "grid": [{"q": 0.5}, {"q": "0.3,0.4", "x": "2,1"}]})";
  const auto out = dir / "r.csv";
  const Result r = run({"sweep", "--config", cfg.string(), "--out", out.string(), "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(out));
  CHECK(r.out.find("triple_product: pass=6") != std::string::npos);
  const Result stdout_report = run({"sweep", "--config", cfg.string()});
  CHECK(stdout_report.code == 0);
  CHECK(stdout_report.out.rfind("{", 0) == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify-all writes one report per identity") {
  const auto dir = scratch_dir("qseries_cli_verify_all");
  const Result r = run({"verify-all", "--out-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("all identities pass") != std::string::npos);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  CHECK(files == 12);

  const Result tight = run({"verify-all", "--out-dir", dir.string(), "--tolerance", "1e-30"});
  CHECK(tight.code == 1);
  CHECK(tight.out.find("failures in:") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("shipped example configs sweep cleanly") {
  int seen = 0;
  for (const auto& e : std::filesystem::directory_iterator(std::filesystem::path(QSERIES_SOURCE_DIR) / "configs")) {
    if (e.path().extension() != ".json") continue;
    ++seen;
    const auto out = std::filesystem::temp_directory_path() / ("qseries_" + e.path().filename().string());
    const Result r = run({"sweep", "--config", e.path().string(), "--out", out.string()});
    INFO(e.path().string() << "\n" << r.out << r.err);
    CHECK(r.code == 0);
    std::filesystem::remove(out);
  }
  CHECK(seen >= 2);
}
