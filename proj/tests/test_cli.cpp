// Exit-code and golden-output checks against the built binary.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string out_path = std::string(COXRIG_BUILD_DIR) + "/cli_out.tmp";
  const std::string cmd = std::string(COXRIG_BIN) + " " + args + " > " +
                          out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

std::string fixture(const std::string& name) {
  return std::string(COXRIG_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("reduce prints the canonical word") {
  auto r = run("reduce --m " + fixture("i2_3.cox") + " --word s,t,s,t");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "t,s\n");
}

TEST_CASE("equal distinguishes verdicts by exit code") {
  CHECK(run("equal --m " + fixture("i2_3.cox") + " --a s,t,s --b t,s,t").exit_code == 0);
  CHECK(run("equal --m " + fixture("i2_3.cox") + " --a s --b t").exit_code == 1);
}

TEST_CASE("order on figure-2 fixtures reports 120 and 192") {
  auto left = run("order --m " + fixture("fig2_left.cox"));
  CHECK(left.exit_code == 0);
  CHECK(left.out == "120\n");
  auto right = run("order --m " + fixture("fig2_right.cox"));
  CHECK(right.exit_code == 0);
  CHECK(right.out == "192\n");
}

TEST_CASE("order exit code 3 when caps bind") {
  auto r = run("--enum-size-cap 50 order --m " + fixture("fig2_left.cox"));
  CHECK(r.exit_code == 3);
}

TEST_CASE("compare: figure 1 differs, figure 2 (as-drawn reading) matches") {
  auto fig1 = run("compare --a " + fixture("fig1_left.cox") + " --b " +
                  fixture("fig1_right.cox"));
  CHECK(fig1.exit_code == 1);
  CHECK(fig1.out.find("DIFFER") == 0);
  CHECK(fig1.out.find("(2, 1, {6})") != std::string::npos);
  CHECK(fig1.out.find("(3, 3, {2,2,3})") != std::string::npos);

  auto fig2 = run("compare --a " + fixture("fig2_left_inf.cox") + " --b " +
                  fixture("fig2_right_inf.cox"));
  CHECK(fig2.exit_code == 0);
  CHECK(fig2.out.find("SAME") == 0);
  CHECK(fig2.out.find("(4, 3, {3,3,3})") != std::string::npos);
}

TEST_CASE("dimension on the figure-1 fixtures") {
  CHECK(run("dimension --m " + fixture("fig1_left.cox")).out == "2\n");
  CHECK(run("dimension --m " + fixture("fig1_right.cox")).out == "3\n");
}

TEST_CASE("spherical verdicts and exit codes") {
  CHECK(run("spherical --m " + fixture("i2_6.cox")).exit_code == 0);
  CHECK(run("spherical --m " + fixture("twist_rank3.cox")).exit_code == 1);
  CHECK(run("spherical --m " + fixture("twist_rank3.cox") + " --subset s,t")
            .exit_code == 0);
}

TEST_CASE("is-reflection verdict exit codes") {
  CHECK(run("is-reflection --m " + fixture("twist_rank3.cox") + " --word u,s,u")
            .exit_code == 0);
  CHECK(run("is-reflection --m " + fixture("i2_2.cox") + " --word s,t")
            .exit_code == 1);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run("reduce --m " + fixture("i2_3.cox") + " --word s,x").exit_code == 2);
  CHECK(run("reduce --m /nonexistent.cox --word s").exit_code == 2);
  CHECK(run("twist --m " + fixture("twist_rank3_m4.cox") + " --s s --t t")
            .exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("cap exhaustion exits 3") {
  // 41 letters exceeds the default word cap of 40
  std::string long_word = "s";
  for (int i = 0; i < 40; ++i) long_word += ",s";
  CHECK(run("reduce --m " + fixture("i2_3.cox") + " --word " + long_word)
            .exit_code == 3);
}

TEST_CASE("align on the shipped maps") {
  auto r3 = run("align --map " + fixture("maps/twist_rank3_map.json"));
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("s: partner t") != std::string::npos);
  CHECK(r3.out.find("(equal)") != std::string::npos);

  auto r4 = run("--json align --map " + fixture("maps/twist_rank4_map.json"));
  CHECK(r4.exit_code == 0);
  CHECK(r4.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("JSON error shape carries ok=false and a message") {
  auto r = run("--json reduce --m " + fixture("i2_3.cox") + " --word s,x");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("\"ok\": false") != std::string::npos);
  CHECK(r.out.find("\"error\"") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::string args = "--json davis build --m " + fixture("i2_6.cox") +
                           " --radius 6 --format json";
  auto first = run(args);
  auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"complete\": true") != std::string::npos);
}

TEST_CASE("table export emits DOT") {
  auto r = run("table export --m " + fixture("i2_2.cox") + " --format dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("graph cayley") == 0);
}

TEST_CASE("davis build emits the Hasse diagram") {
  auto r = run("davis build --m " + fixture("i2_2.cox") +
               " --radius 2 --format dot --part hasse");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph hasse") == 0);
}
