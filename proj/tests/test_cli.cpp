#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "orlicz/config.hpp"
#include "orlicz/orlicz_norm.hpp"

using namespace orlicz;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const fs::path tmp = fs::temp_directory_path() / "orlicz_cli_stdout.txt";
  const std::string cmd =
      std::string("\"") + ORLICZ_CLI_PATH + "\" " + args + " > \"" + tmp.string() + "\" 2>&1";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {raw == 0 ? 0 : 1, ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(split(line, ','));
  return rows;
}

const std::string data = ORLICZ_DATA_DIR;

}  // namespace

TEST_CASE("norm subcommand equals the weighted L2 norm") {
  const fs::path dir = fs::temp_directory_path() / "orlicz_cli_norm";
  fs::create_directories(dir);
  const std::vector<double> v = {1, -2, 0.5, 3, 0, 0, 1, 2};
  write_grid_file((dir / "f.grid").string(), GridFile{1, 3, 0, v});
  const Run r = run("norm --function file:" + (dir / "f.grid").string() +
                    " --weight const --young power:p=2");
  REQUIRE(r.status == 0);
  double s = 0.0;
  for (double x : v) s += x * x / 8.0;
  CHECK(parse_double(r.out, "norm") == doctest::Approx(std::sqrt(s)).epsilon(1e-12));
}

TEST_CASE("greedy subcommand on the bundled example") {
  const fs::path out = fs::temp_directory_path() / "orlicz_cli_greedy.csv";
  const Run r = run("greedy --config " + data + "/example.cfg --young power:p=2 --weight const "
                    "--N 8 --out " + out.string());
  REQUIRE(r.status == 0);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == std::vector<std::string>{"N", "greedy_error", "sigma_support", "ratio"});
  for (std::size_t i = 2; i < rows.size(); ++i)
    CHECK(parse_double(rows[i][1], "e") <= parse_double(rows[i - 1][1], "e"));

  const Run ex = run("greedy --config " + data + "/example.cfg --N 3 --sigma-mode exhaustive");
  REQUIRE(ex.status == 0);
  CHECK(ex.out.find("sigma_exhaustive") != std::string::npos);
}

TEST_CASE("democracy subcommand is deterministic") {
  const fs::path a = fs::temp_directory_path() / "orlicz_cli_demo_a.csv";
  const fs::path b = fs::temp_directory_path() / "orlicz_cli_demo_b.csv";
  const std::string args = "democracy --young zygmund:p=2,a=1 --J 8 --M 2 --Nmax 256 --seed 7 "
                           "--trials 2 --out ";
  REQUIRE(run(args + a.string()).status == 0);
  REQUIRE(run(args + b.string()).status == 0);
  const std::string ta = slurp(a);
  CHECK(ta == slurp(b));
  CHECK(ta.rfind("N,gen,norm,surrogate,h_minus,h_plus\n", 0) == 0);
  CHECK(csv_rows(ta).size() > 9);
}

TEST_CASE("embeddings and besov subcommands") {
  const Run e = run("embeddings --function bump --J 8 --young zygmund:p=2,a=1 --alpha 0.5 --q 1");
  REQUIRE(e.status == 0);
  CHECK(e.out.find("left,middle,right") != std::string::npos);
  const Run w = run("embeddings --witness --Nmax 4 --J 8 --weight power:gamma=0.5");
  REQUIRE(w.status == 0);
  CHECK(csv_rows(w.out).size() == 4);
  const Run b = run("besov --function sawtooth --J 8 --gamma 0.25 --p 2");
  REQUIRE(b.status == 0);
  CHECK(b.out.find("tau,norm_a,norm_b,norm_c") != std::string::npos);
}

TEST_CASE("plot script emission") {
  const fs::path out = fs::temp_directory_path() / "orlicz_cli_plot.csv";
  const fs::path py = fs::temp_directory_path() / "orlicz_cli_plot.py";
  fs::remove(py);
  REQUIRE(run("greedy --J 5 --N 4 --out " + out.string() + " --plotscript " + py.string()).status == 0);
  CHECK(fs::exists(py));
  CHECK(run("greedy --J 5 --N 4 --plotscript " + py.string()).status != 0);
}

TEST_CASE("errors exit nonzero") {
  CHECK(run("").status != 0);
  CHECK(run("norm --young nonsense").status != 0);
  CHECK(run("norm --weight power:gamma=-2").status != 0);
  CHECK(run("norm --function file:/nonexistent.grid").status != 0);
  const fs::path cfg = fs::temp_directory_path() / "orlicz_cli_bad.cfg";
  {
    std::ofstream f(cfg);
    f << "J = 4\n\nmystery = 1\n";
  }
  const Run r = run("norm --config " + cfg.string());
  CHECK(r.status != 0);
  CHECK(r.out.find("line 3") != std::string::npos);
  // flags override the config file
  {
    std::ofstream f(cfg);
    f << "J = 4\nyoung = power:p=2\n";
  }
  const Run a = run("norm --config " + cfg.string());
  const Run b = run("norm --config " + cfg.string() + " --young power:p=3");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out != b.out);
}
