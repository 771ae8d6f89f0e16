#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "latt/io.hpp"

#ifndef LATT_CLI_PATH
#define LATT_CLI_PATH "./latt"
#endif

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("latt-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LATT_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("usage errors exit with 2 before any computation") {
  CHECK(run_cli("no-such-command") == 2);
  CHECK(run_cli("tail-prob --n 4 --trials 10") == 2);          // missing --seed
  CHECK(run_cli("tail-prob --seed 1 --bogus-flag 3") == 2);    // unknown flag
  CHECK(run_cli("pep --seed 1 --format xml") == 2);            // bad enum value
  CHECK(run_cli("") == 2);                                     // no subcommand
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("tail-prob --help") == 0);
}

TEST_CASE("runtime errors exit with 1") {
  CHECK(run_cli("bound-curves --out /nonexistent-dir/x.csv") == 1);
}

TEST_CASE("stochastic reruns are byte-identical for any thread count") {
  TempDir tmp;
  const std::string a = tmp.file("a.csv");
  const std::string b = tmp.file("b.csv");
  CHECK(run_cli("--threads 1 tail-prob --n 2,4 --theta 1.5 --trials 4000 --seed 5 --out " + a) == 0);
  CHECK(run_cli("--threads 3 tail-prob --n 2,4 --theta 1.5 --trials 4000 --seed 5 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));

  const std::string c = tmp.file("c.json");
  const std::string d = tmp.file("d.json");
  CHECK(run_cli("--threads 2 pep --n 4 --trials 2000 --seed 6 --format json --out " + c) == 0);
  CHECK(run_cli("--threads 5 pep --n 4 --trials 2000 --seed 6 --format json --out " + d) == 0);
  CHECK(slurp(c) == slurp(d));

  const std::string e = tmp.file("e.json");
  const std::string f = tmp.file("f.json");
  CHECK(run_cli("decode --n 4 --m 2 --seed 11 --out " + e) == 0);
  CHECK(run_cli("decode --n 4 --m 2 --seed 11 --out " + f) == 0);
  CHECK(slurp(e) == slurp(f));
}

TEST_CASE("config file supplies values, flags override them") {
  TempDir tmp;
  const std::string cfg = tmp.file("run.cfg");
  {
    std::ofstream out(cfg);
    out << "[bound-curves]\n"
        << "theta-min=0.5\n"
        << "theta-max=2.5\n"
        << "steps=3\n"
        << "n=4\n";
  }
  const std::string out1 = tmp.file("cfg1.csv");
  CHECK(run_cli("--config " + cfg + " bound-curves --out " + out1) == 0);
  const auto t1 = latt::read_csv(out1);
  REQUIRE(t1.rows.size() == 3);  // 3 grid points, one n
  CHECK(t1.rows[0][0] == "0.5");

  // Flag overrides the config value.
  const std::string out2 = tmp.file("cfg2.csv");
  CHECK(run_cli("--config " + cfg + " bound-curves --steps 5 --out " + out2) == 0);
  CHECK(latt::read_csv(out2).rows.size() == 5);
}

TEST_CASE("decode output cross-checks against the library") {
  TempDir tmp;
  const std::string out = tmp.file("trace.json");
  CHECK(run_cli("decode --n 6 --m 3 --L 2 --tau 0 --N0 0.1 --alpha 2 --seed 7 "
                "--format json --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"leaf_count\"") != std::string::npos);
  CHECK(text.find("\"level_counts\"") != std::string::npos);
  CHECK(text.find("\"total_visits\"") != std::string::npos);
  CHECK(text.back() == '\n');
}
