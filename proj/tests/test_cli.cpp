#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run gcon(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " GCON_BIN " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GCON_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gcon-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("solve prints values and verdicts") {
  CHECK(gcon("solve kappa-k -g " + data("k4.graph") + " -k 2").out == "3\n");
  CHECK(gcon("solve lambda-set -g " + data("p3.graph") + " -S 0,2").out == "1\n");
  CHECK(gcon("solve lambda-set -g " + data("p3.graph")).out == "1\n");
  const Run no = gcon("solve kappa-set -g " + data("p3.graph") + " -S 0,2 --decide 2");
  CHECK(no.code == 0);
  CHECK(no.out == "no\n");
  CHECK(gcon("solve kappa -g " + data("k4.graph")).out == "3\n");
}

TEST_CASE("solve prints one witness tree per line") {
  const Run r = gcon("solve lambda-set -g " + data("k4.graph") + " -S 0,1,2,3 --witness");
  CHECK(r.code == 0);
  REQUIRE(r.out.rfind("2\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
}

TEST_CASE("reduce prints sizes and writes the instance") {
  const auto out = scratch("a.p1.graph");
  const Run r = gcon("reduce 3dm-p1 -i " + data("a.3dm") + " -o " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out == "V=21 E=26 q=7\n");
  CHECK(std::filesystem::exists(out));
  const Run back = gcon("solve kappa-set -g " + out.string() + " -S 0,1");
  CHECK(back.code == 0);

  CHECK(gcon("reduce linegraph -i " + data("p3.graph")).out == "V=5 E=5 l=-\n");
  CHECK(gcon("reduce expand-l -i " + data("p3.graph") + " --l 2").code == 2);
}

TEST_CASE("verify exit codes follow the result") {
  const Run ok = gcon("verify --reduction R3 --max-n 4");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS R3 ") != std::string::npos);

  const Run unknown = gcon("verify --reduction R9");
  CHECK(unknown.code == 2);

  // The 3-SAT construction has counterexamples within its default family.
  const Run bad = gcon("verify --reduction R5 --no-timing --artifacts " + scratch("r5").string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL R5 ") != std::string::npos);
  CHECK(std::filesystem::exists(scratch("r5") / "R5-1.cnf"));

  CHECK(gcon("verify --reduction R2 --max-n 3").code == 3);
}

TEST_CASE("verify output is byte-identical without timing") {
  const std::string args = "verify --reduction R6 --max-n 3 --no-timing";
  const Run a = gcon(args);
  const Run b = gcon(args + " --serial");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == gcon(args).out);

  const auto file = scratch("r6.txt");
  const Run to_file = gcon(args + " --out " + file.string());
  CHECK(to_file.code == 0);
  CHECK(to_file.out.rfind("PASS R6 ", 0) == 0);
  CHECK(std::filesystem::exists(file));
}

TEST_CASE("errors map to exit codes") {
  CHECK(gcon("solve kappa-k -g " + data("bad.graph") + " -k 2").code == 2);
  CHECK(gcon("solve kappa-k -g " + data("missing.graph") + " -k 2").code == 2);
  CHECK(gcon("solve kappa-set -g " + data("k4.graph") + " -S 0,9").code == 2);
  CHECK(gcon("solve bogus -g " + data("k4.graph")).code == 2);
  CHECK(gcon("").code == 2);
  CHECK(gcon("--help").code == 0);
}

TEST_CASE("size guard exits 3 unless forced") {
  const std::string args = "solve lambda-k -g " + data("p17.graph") + " -k 2";
  CHECK(gcon(args).code == 3);
  const Run forced = gcon(args + " --force");
  CHECK(forced.code == 0);
  CHECK(forced.out == "1\n");
  CHECK(gcon(args, "GCON_FORCE=1").out == "1\n");
  CHECK(gcon(args, "GCON_FORCE=0").code == 3);
}
