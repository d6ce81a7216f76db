#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(TREECOUNT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("count subcommand") {
  auto r = run("count --n 2 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4\n");

  r = run("count --n 0 --i 1 --k 0 --l 0 --m 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  CHECK(run("count --n 2 --k 5").exit_code == 2);
  CHECK(run("count --n 2").exit_code == 2);
  CHECK(run("count --n 2 --k 1 --degree 1").exit_code == 2);

  r = run("count --n 2 --degree 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "6\n");

  r = run("count --n 2 --i 2 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");

  r = run("count --n 2 --k 1 --l 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");

  // plain decimal, no scientific notation, even when huge
  r = run("count --n 60 --k 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("e") == std::string::npos);
  CHECK(r.out.size() > 80);
}

TEST_CASE("table subcommand") {
  auto r = run("table --n 2 --source both");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());

  r = run("table --n 1 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "i,k,l,m,count\n1,0,1,0,1\n2,1,0,1,1\n");

  r = run("table --n 1 --format json --source oracle");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 2);

  CHECK(run("table --n 9 --source oracle").exit_code == 2);
  CHECK(run("table --n 1 --source bogus").exit_code == 2);
  CHECK(run("table --n 1 --format yaml").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = run("verify --suite census --max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("census_equivalence") != std::string::npos);

  r = run("verify --suite identities --sum1-max-n 4 --sum2-max-n 4 --chu-max-N 4 "
          "--abel-max-N 4 --chen-max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);

  CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("sample subcommand") {
  auto r = run("sample --n 2 --k 2 --count 3 --seed 7");
  CHECK(r.exit_code == 0);
  std::string line = R"({"n":3,"root":3,"parent":{"1":3,"2":3}})";
  CHECK(r.out == line + "\n" + line + "\n" + line + "\n");

  auto a = run("sample --n 4 --k 1 --count 5 --seed 1");
  auto b = run("sample --n 4 --k 1 --count 5 --seed 1");
  auto c = run("sample --n 4 --k 1 --count 5 --seed 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);

  CHECK(run("sample --n 1 --k 0 --l 0 --count 1 --seed 1").exit_code == 2);
}

TEST_CASE("oeis subcommand offline") {
  CHECK(run("oeis --id A071207 --rows 8 --offline").exit_code == 0);
  CHECK(run("oeis --id A232006 --rows 8 --offline").exit_code == 0);
  CHECK(run("oeis --id A00").exit_code == 2);
  // fixture has 11 rows only
  CHECK(run("oeis --id A071207 --rows 20 --offline").exit_code == 1);
}

TEST_CASE("stdout is byte-stable across runs") {
  auto a = run("table --n 3 --format csv");
  auto b = run("table --n 3 --format csv");
  CHECK(a.out == b.out);
  auto c = run("verify --suite census --max-n 3");
  auto d = run("verify --suite census --max-n 3");
  CHECK(c.out == d.out);
}
