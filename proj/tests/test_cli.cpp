#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace lagasym;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "lagasym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("lagasym_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("helpers") {
    CHECK(cli::format_double(0.1) == "0.10000000000000001");
    CHECK(cli::format_double(200.0) == "200");
    CHECK(cli::parse_complex("0.5") == std::complex<double>(0.5, 0.0));
    CHECK(cli::parse_complex("2+1i") == std::complex<double>(2.0, 1.0));
    CHECK(cli::parse_complex("-1e-3-2.5i") == std::complex<double>(-1e-3, -2.5));
    CHECK(cli::parse_complex("-i") == std::complex<double>(0.0, -1.0));
    CHECK(cli::parse_complex("1e+2+3e-1i") == std::complex<double>(100.0, 0.3));
    CHECK_THROWS(cli::parse_complex("abc"));
    const auto g = cli::parse_grid("1:2:0.25");
    REQUIRE(g.size() == 5);
    CHECK(g.back() == doctest::Approx(2.0));
    CHECK_THROWS(cli::parse_grid("1:2"));
    CHECK_THROWS(cli::parse_grid("2:1:0.5"));
    CHECK(cli::fnv1a64("") == 14695981039346656037ull);
    CHECK(cli::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  }

  TEST_CASE("mrs command") {
    Scratch s;
    const auto cfg = s.write("lag.json", R"({"alpha": 0.0, "q": [0.0, 1.0]})");
    const auto r = run_cli({"mrs", "--config", cfg, "--n", "50"});
    REQUIRE(r.code == cli::exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("beta_n").get<double>() == doctest::Approx(200.0).epsilon(1e-14));
    const auto out = s.path("mrs.json");
    REQUIRE(run_cli({"mrs", "--config", cfg, "--n", "50", "--out", out}).code == 0);
    const auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
    CHECK(m.at("command") == "mrs");
    CHECK(m.at("outputs").size() == 1);
    CHECK(m.at("config_hash").get<std::string>().rfind("fnv1a64:", 0) == 0);
    // the hash depends on the weight, not on the file's formatting
    const auto cfg2 = s.write("lag2.json", "{\n  \"q\": [0, 1],\n  \"alpha\": 0\n}");
    const auto out2 = s.path("mrs2.json");
    REQUIRE(run_cli({"mrs", "--config", cfg2, "--n", "50", "--out", out2}).code == 0);
    CHECK(nlohmann::json::parse(slurp(out2 + ".manifest.json")).at("config_hash") == m.at("config_hash"));
  }

  TEST_CASE("exit codes") {
    Scratch s;
    const auto bad = s.write("bad.json", R"({"alpha": 0.0, "q": [1.0, -1.0]})");
    auto r = run_cli({"mrs", "--config", bad, "--n", "5"});
    CHECK(r.code == cli::exit_config);
    CHECK(r.err.find("q_m must be positive") != std::string::npos);
    CHECK(run_cli({"mrs", "--config", s.path("missing.json"), "--n", "5"}).code == cli::exit_io);
    CHECK(run_cli({"mrs", "--n", "5"}).code == cli::exit_config);
    CHECK(run_cli({"nonsense"}).code == cli::exit_config);
    const auto alpha = s.write("alpha.json", R"({"alpha": -1.5, "q": [0.0, 1.0]})");
    CHECK(run_cli({"mrs", "--config", alpha, "--n", "5"}).code == cli::exit_config);
    const auto notjson = s.write("nj.json", "{alpha:");
    CHECK(run_cli({"mrs", "--config", notjson, "--n", "5"}).code == cli::exit_config);
    // three positive roots of the MRS equation at n = 1
    const auto multi = s.write("multi.json", R"({"alpha": 0.0, "q": [0.0, 40.0, -40.0, 9.0]})");
    r = run_cli({"mrs", "--config", multi, "--n", "1"});
    CHECK(r.code == cli::exit_numerical);
    CHECK(r.err.find("mrs") != std::string::npos);
    const auto cfg = s.write("lag.json", R"({"alpha": 0.0, "q": [0.0, 1.0]})");
    CHECK(run_cli({"mrs", "--config", cfg, "--n", "5", "--out", (s.dir / "nodir" / "x.json").string()}).code ==
          cli::exit_io);
  }

  TEST_CASE("deterministic CSV") {
    Scratch s;
    const auto cfg = s.write("w.json", R"({"alpha": 0.7, "q": [0.0, 0.0, 1.0]})");
    const auto a = s.path("a.csv"), b = s.path("b.csv");
    const std::vector<std::string> base = {"eval", "--what", "pn", "--config", cfg, "--n", "20",
                                           "--points", "0.5,2+1i,1.02,0.005,0.3-0.01i"};
    auto args = base;
    args.insert(args.end(), {"--out", a});
    REQUIRE(run_cli(args).code == 0);
    args = base;
    args.insert(args.end(), {"--out", b});
    REQUIRE(run_cli(args).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a).find("z_re") == 0);
    std::istringstream lines(slurp(a));
    int count = 0;
    for (std::string l; std::getline(lines, l);) ++count;
    CHECK(count == 6);
  }

  TEST_CASE("oracle, compare and fredholm commands") {
    Scratch s;
    const auto cfg = s.write("lag.json", R"({"alpha": 0.0, "q": [0.0, 1.0]})");
    const auto table = s.path("t.json");
    REQUIRE(run_cli({"oracle", "build", "--config", cfg, "--nmax", "20", "--out", table}).code == 0);
    auto r = run_cli({"oracle", "eval", "--table", table, "--n", "3", "--points", "1.5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1.5") != std::string::npos);
    CHECK(run_cli({"oracle", "eval", "--table", table, "--n", "30", "--points", "1"}).code == cli::exit_numerical);
    const auto rec = s.path("rec.csv");
    r = run_cli({"compare", "--mode", "recurrence", "--table", table, "--n-list", "5,10,20", "--out", rec});
    REQUIRE(r.code == 0);
    CHECK(slurp(rec).find("quantity") == 0);
    const auto fr = s.path("fr.csv");
    r = run_cli({"fredholm", "--gamma", "3", "--s-grid", "1:2:0.5", "--check-painleve", "--out", fr});
    REQUIRE(r.code == 0);
    const std::string text = slurp(fr);
    std::istringstream lines(text);
    int count = 0;
    for (std::string l; std::getline(lines, l);) ++count;
    CHECK(count == 4);
    CHECK(run_cli({"fredholm", "--alpha", "0", "--gamma", "1", "--s-grid", "1:2:1"}).code == cli::exit_config);
    CHECK(run_cli({"fredholm", "--alpha", "0", "--s-grid", "1:2"}).code == cli::exit_config);
  }
}
