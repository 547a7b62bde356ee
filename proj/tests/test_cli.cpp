#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("STABSET_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("STABSET_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/stabset_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("subst member on the shipped substitution file") {
  auto r = run("subst member " + data_file("thue_morse.sub") + " --word ab");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"in_orb\": false") != std::string::npos);
  CHECK(r.output.find("\"in_stab\": false") != std::string::npos);
  CHECK(r.output.find("\"in_atrac\": false") != std::string::npos);
}

TEST_CASE("subst fixpoint expands the fixed word") {
  auto r = run("subst fixpoint " + data_file("thue_morse.sub") + " --seed a --length 16");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("abbabaabbaababba") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
  auto bad = temp_file("bad.sub", "a => b\n");
  auto r = run("subst analyze " + bad);
  CHECK(r.exit_code == 2);
  auto missing = run("fmap sets /nonexistent.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("fmap sets on a JSON graph") {
  auto graph = temp_file("fmap.json", R"({"size": 3, "succ": [0, 0, 1]})");
  auto r = run("fmap sets " + graph);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"stab_equals_atrac\": true") != std::string::npos);
  auto invalid = temp_file("fmap_bad.json", R"({"size": 3, "succ": [0, 7, 1]})");
  CHECK(run("fmap sets " + invalid).exit_code == 2);
}

TEST_CASE("hilbert verify at a small window") {
  auto r = run("hilbert verify --kmax 8 --nmax 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("interval commands on a JSON map") {
  auto ramp = temp_file("ramp.json", R"({
    "breakpoints": ["0", "1/2", "1"],
    "pieces": [{"p": "0", "q": "1/2"}, {"p": "3/2", "q": "-3/4"}],
    "attach": ["left"]
  })");
  auto r = run("interval atrac " + ramp + " --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"all_nonempty\": true") != std::string::npos);
  auto chain = run("interval chain " + ramp + " --x 1/2 --depth 12");
  CHECK(chain.exit_code == 0);
  CHECK(chain.output.find("\"found\": true") != std::string::npos);
}

TEST_CASE("freegroup commands") {
  auto endo = temp_file("endo.json", R"({"rank": 2, "images": ["x", "x"]})");
  auto r = run("freegroup member " + endo + " --word x --depth 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"exact\": true") != std::string::npos);
  CHECK(r.output.find("\"in_stab\": true") != std::string::npos);
  auto rank = run("freegroup rankchain " + endo + " --n 3");
  CHECK(rank.exit_code == 0);
}

TEST_CASE("monoid commands") {
  CHECK(run("monoid kolakoski --length 40").exit_code == 0);
  CHECK(run("monoid epi --directive \"La Lb La\" --length 20").exit_code == 0);
  CHECK(run("monoid smooth --word 2211212212 --alphabet 12 --depth 3").exit_code == 0);
  CHECK(run("monoid smooth --word 111 --alphabet 12 --depth 2").exit_code == 1);
  auto sys = temp_file("sys.json",
                       R"({"size": 2, "maps": [{"name": "c", "succ": [0, 0]},
                                               {"name": "s", "succ": [1, 0]}]})");
  auto r = run("monoid finite " + sys);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"equal\": true") != std::string::npos);
}

TEST_CASE("campaign is deterministic and seed-stable") {
  auto a = run("campaign --sizes 1 --seed 42");
  auto b = run("campaign --sizes 1 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"all_pass\": true") != std::string::npos);
  auto other = run("campaign --sizes 1 --seed 43");
  CHECK(other.exit_code == 0);
  CHECK(other.output.find("\"all_pass\": true") != std::string::npos);
  auto empty = run("campaign --sizes 0");
  CHECK(empty.exit_code == 0);
}

TEST_CASE("text rendering") {
  auto r = run("monoid kolakoski --length 12 --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("command: \"monoid kolakoski\"") != std::string::npos);
}
