#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "seqchaos/cli.hpp"
#include "seqchaos/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = seqchaos::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("seqchaos_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("primes to standard output") {
  const auto r = run({"primes", "--count", "10", "--format", "csv", "-o", "-"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,x_k\n1,2\n2,3\n3,5\n4,7\n5,11\n6,13\n7,17\n8,19\n9,23\n10,29\n");
}

TEST_CASE("pi digits and derivative") {
  CHECK(run({"pi", "--count", "5"}).out == "k,X_k\n1,1\n2,4\n3,1\n4,5\n5,9\n");
  CHECK(run({"derive", "--count", "5"}).out == "k,D_k\n2,2.0\n3,1.0\n4,2.0\n");
}

TEST_CASE("derive rejects a sequence with a repeated value") {
  const auto dir = scratch("derive");
  const auto file = dir / "digits.csv";
  std::ofstream(file) << "X_k\n3\n1\n4\n1\n5\n9\n2\n6\n6\n3\n";
  const auto r = run({"derive", "--from", file.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("ZeroDenominator") != std::string::npos);
  CHECK(r.err.find("index 8") != std::string::npos);
  CHECK(r.out.empty());

  const auto digits = run({"derive", "--source", "digits", "--count", "100"});
  CHECK(digits.code == 2);
  CHECK(digits.err.find("ZeroDenominator") != std::string::npos);
}

TEST_CASE("two-column input keeps its index") {
  const auto dir = scratch("twocol");
  const auto file = dir / "squares.csv";
  std::ofstream(file) << "k,f_k\n3,9\n4,16\n5,25\n6,36\n";
  const auto r = run({"derive", "--from", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "k,D_k\n4,1.2857142857142858\n5,1.2222222222222223\n");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"primes", "--count", "abc"}).code == 1);
  CHECK(run({"primes", "--count", "0"}).code == 1);
  CHECK(run({"primes", "--format", "png"}).code == 1);
  CHECK(run({"return-map", "--count", "10", "--xmin", "1"}).code == 1);
  const auto fig = run({"figure", "fig0"});
  CHECK(fig.code == 1);
  CHECK(fig.err.find("UnknownFigure") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("runtime errors exit 2 and name the cause") {
  const auto cap = run({"primes", "--count", "20000000"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("CapacityExceeded") != std::string::npos);

  const auto io = run({"primes", "--count", "3", "-o", "/nonexistent-dir/x.csv"});
  CHECK(io.code == 2);
  CHECK(io.err.find("/nonexistent-dir/x.csv") != std::string::npos);

  const auto missing = run({"spectrum", "--from", "/nonexistent-dir/in.csv"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/nonexistent-dir/in.csv") != std::string::npos);
}

TEST_CASE("svg output") {
  const auto r = run({"return-map", "--count", "50", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("<?xml"));
  const auto spec = run({"spectrum", "--source", "digits", "--count", "64", "--format", "svg", "--range", "full"});
  CHECK(spec.code == 0);
  std::size_t stems = 0;
  for (auto p = spec.out.find("class=\"stem\""); p != std::string::npos; p = spec.out.find("class=\"stem\"", p + 1)) ++stems;
  CHECK(stems == 64);
}

TEST_CASE("figure CSVs equal the composed subcommands") {
  const auto dir = scratch("figures");
  const std::string primes = "2000", digits = "600";
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"fig1", {"return-map", "--source", "primes", "--count", primes}},
      {"fig2", {"return-map", "--source", "primes", "--count", primes, "--xmin", "10000", "--xmax", "10200"}},
      {"fig3", {"derive", "--count", primes}},
      {"fig4", {"return-map", "--source", "derivative", "--count", primes}},
      {"fig5", {"return-map", "--source", "derivative", "--count", primes, "--xmin", "0", "--xmax", "3",
                "--ymin", "0", "--ymax", "3"}},
      {"fig6", {"spectrum", "--source", "derivative", "--count", primes}},
      {"fig7", {"pi", "--count", digits}},
      {"fig8", {"return-map", "--source", "digits", "--count", digits}},
      {"fig9", {"spectrum", "--source", "digits", "--count", digits}},
  };
  for (const auto& [name, composed] : cases) {
    CAPTURE(name);
    const auto fig = run({"figure", name, "--out-dir", dir.string(), "--primes", primes, "--digits", digits});
    REQUIRE(fig.code == 0);
    const auto csv = slurp(dir / (name + ".csv"));
    CHECK(!slurp(dir / (name + ".svg")).empty());
    const auto sub = run(composed);
    REQUIRE(sub.code == 0);
    CHECK(csv == sub.out);
  }
}

TEST_CASE("fig8 points lie on the digit lattice") {
  const auto dir = scratch("fig8");
  REQUIRE(run({"figure", "fig8", "--out-dir", dir.string(), "--digits", "2000"}).code == 0);
  std::ifstream in(dir / "fig8.csv");
  const auto table = seqchaos::parse_csv(in);
  CHECK(table.rows.size() == 1999);
  for (const auto& row : table.rows) {
    for (const auto& cell : row) {
      const auto v = std::get<std::int64_t>(cell);
      REQUIRE(v >= 0);
      REQUIRE(v <= 9);
    }
  }
}

TEST_CASE("figure fig6 at the default scale") {
  const auto dir = scratch("fig6");
  const auto r = run({"figure", "fig6", "--out-dir", dir.string()});
  CHECK(r.code == 0);
  std::ifstream in(dir / "fig6.csv");
  const auto table = seqchaos::parse_csv(in);
  REQUIRE(table.rows.size() == 99'998);
  const double dc = std::get<double>(table.rows[0][3]);
  for (std::size_t k = 1; k < table.rows.size(); ++k) REQUIRE(std::get<double>(table.rows[k][3]) < dc);
  CHECK(fs::exists(dir / "fig6.svg"));
}
