#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "evo_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Result evobench(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "evo_cli_test";
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string("\"") + EVOBENCH_PATH + "\" " + args + " >\"" +
                          out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(evobench("").code == 2);
  CHECK(evobench("frobnicate").code == 2);
  CHECK(evobench("run --bogus 3").code == 2);
  const Result unknown = evobench("run --problem knapsack");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("knapsack") != std::string::npos);
  const Result bad_key = evobench("run --problem chebyshev --algo de --set warp=9");
  CHECK(bad_key.code == 2);
  CHECK(bad_key.err.find("warp") != std::string::npos);
  CHECK(evobench("run --problem puc --dim 3").code == 2);
  CHECK(evobench("scale --algo de --dims 30,10").code == 2);

  const fs::path dir = scratch("usage");
  const Result r = evobench("bench --problem chebyshev --algo de --runs 2 --set CR=oops --out \"" +
                            (dir / "o").string() + "\"");
  CHECK(r.code == 2);
  CHECK_FALSE(fs::exists(dir / "o"));
}

TEST_CASE("help exits cleanly") {
  const Result r = evobench("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("bench") != std::string::npos);
}

TEST_CASE("presets dump includes the IASA tables") {
  const Result r = evobench("presets --algo iasa");
  REQUIRE(r.code == 0);
  const auto puc = r.out.find("[iasa.puc]");
  REQUIRE(puc != std::string::npos);
  CHECK(r.out.find("TminAtCallsRate=20%", puc) != std::string::npos);
  CHECK(r.out.find("[de.") == std::string::npos);
}

TEST_CASE("single runs are reproducible") {
  const Result a = evobench("run --problem type0 --dim 10 --algo rasa --seed 1");
  const Result b = evobench("run --problem type0 --dim 10 --algo rasa --seed 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("problem=type0 algorithm=rasa dim=10") != std::string::npos);
}

TEST_CASE("bench writes reports and respects the run count") {
  const fs::path dir = scratch("bench");
  const Result r = evobench("bench --problem chebyshev --algo sade --runs 3 --seed 7 --out \"" +
                            dir.string() + "\"");
  REQUIRE(r.code == 0);
  const std::string csv = slurp(dir / "summary.csv");
  CHECK(csv == r.out);
  CHECK(csv.rfind("problem,algorithm,dim,runs,successes,avg_calls,base_seed\n", 0) == 0);
  CHECK(fs::exists(dir / "summary.json"));
  const std::string runs = slurp(dir / "runs_sade_chebyshev_d9.csv");
  CHECK(runs.rfind("run_index,seed,success,calls,best_value\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : runs) lines += c == '\n';
  CHECK(lines == 4);
}

TEST_CASE("failed campaigns report N/A") {
  const Result r =
      evobench("bench --problem chebyshev --algo de --runs 2 --set problem.max_calls=40");
  REQUIRE(r.code == 0);
  CHECK(r.out.find(",0,N/A,") != std::string::npos);
}

TEST_CASE("worker count does not change results") {
  const std::string base = "bench --problem type0 --dim 3 --algo de,iasa --runs 6 --seed 3 "
                           "--set problem.max_calls=20000";
  const Result one = evobench(base + " --workers 1");
  const Result many = evobench(base + " --workers 4");
  REQUIRE(one.code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("preset files reproduce the built-in campaign") {
  const fs::path dir = scratch("presets");
  REQUIRE(evobench("presets --out \"" + (dir / "all.cfg").string() + "\"").code == 0);
  const std::string base = "bench --problem puc --algo rasa --runs 2 --seed 5";
  const Result builtin = evobench(base);
  const Result from_file = evobench(base + " --preset \"" + (dir / "all.cfg").string() + "\"");
  REQUIRE(builtin.code == 0);
  CHECK(builtin.out == from_file.out);
}

TEST_CASE("unwritable output is a campaign failure") {
  const Result r = evobench(
      "bench --problem chebyshev --algo de --runs 1 --set problem.max_calls=20 --out "
      "/proc/evo-no-such-dir");
  CHECK(r.code == 1);
}

TEST_CASE("scale writes plot data") {
  const fs::path dir = scratch("scale");
  const Result r = evobench("scale --algo de --dims 2,3 --runs 2 --set problem.max_calls=5000 --out \"" +
                            dir.string() + "\"");
  REQUIRE(r.code == 0);
  const std::string dat = slurp(dir / "scaling.dat");
  CHECK(dat.find("\n2 ") != std::string::npos);
  CHECK(dat.find("\n3 ") != std::string::npos);
}
