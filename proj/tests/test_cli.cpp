// End-to-end checks of the command-line tool: spawns the real binary and
// inspects exit codes and captured output.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(REPKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

} // namespace

TEST_CASE("--help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("group") != std::string::npos);
}

TEST_CASE("malformed input exits with code 2 and a located message") {
  std::string path = "cli_test_broken.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  std::string cmd = std::string(REPKIT_CLI_PATH) + " rep decompose --input " + path +
                    " 2>cli_test_stderr.txt";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  std::ifstream err("cli_test_stderr.txt");
  std::string msg((std::istreambuf_iterator<char>(err)), std::istreambuf_iterator<char>());
  CHECK(msg.find(path) != std::string::npos);
  std::remove(path.c_str());
  std::remove("cli_test_stderr.txt");
}

TEST_CASE("gogi pipeline fixture reports the equivalent pair") {
  RunResult r = run_cli("pipeline gogi --fixture q8-nontrivial");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["component_count"] == 2);
  CHECK(j["summary"]["class_count"] == 1);
  CHECK(j["summary"]["dims"] == nlohmann::json::array({2, 2}));
}

TEST_CASE("decompose fixture intro-diagram cross-checks the multiplicity") {
  RunResult r = run_cli("rep decompose --fixture intro-diagram");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["multiplicities_consistent"] == true);
  CHECK(j["multiplicities"][0]["by_decomposition"] == 2);
  CHECK(j["summary"]["component_count"] == 2);
}

TEST_CASE("same seed gives byte-identical output") {
  for (const char* cmd :
       {"rep decompose --fixture q8-trivial --seed 7",
        "pipeline gogii --fixture tensor --seed 9", "so44 verify --map x12",
        "beta table", "fixtures emit tensor"}) {
    CAPTURE(cmd);
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("beta table defaults to the tensor fixture") {
  RunResult r = run_cli("beta table");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["table"]["n"] == 4);
  CHECK(j["table"]["m"] == 2);
  CHECK(j["table"]["beta"]["y,x"] == 2); // xi_4^2 = -1
  CHECK(j["table"]["beta"]["x,y"] == 0);
  CHECK(j["cocycle_identity_ok"] == true);
}

TEST_CASE("so44 verify --map all passes and reports order 24") {
  RunResult r = run_cli("so44 verify --map all");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 28);
  CHECK(j["jacobi_ok"] == true);
  CHECK(j["generated_permutation_group_order"] == 24);
  for (const auto& m : j["maps"]) CHECK(m["automorphism"] == true);
}

TEST_CASE("fixtures list and emit") {
  RunResult r = run_cli("fixtures list");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool has_q8 = false;
  for (const auto& name : j["fixtures"])
    if (name == "q8-trivial") has_q8 = true;
  CHECK(has_q8);

  RunResult e = run_cli("fixtures emit q8-trivial");
  REQUIRE(e.exit_code == 0);
  auto jf = nlohmann::json::parse(e.out);
  CHECK(jf["rep"]["group"]["labels"].size() == 8);
  CHECK(run_cli("fixtures emit no-such-fixture").exit_code == 2);
}

TEST_CASE("text format renders the same report") {
  RunResult r = run_cli("group center Q8 --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("center_order: 2") != std::string::npos);
}

TEST_CASE("group subcommands") {
  RunResult r = run_cli("group build Z6");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 6);
  CHECK(j["abelian"] == true);

  RunResult iso = run_cli("group isomorphic --a Q8 --b D4");
  REQUIRE(iso.exit_code == 0);
  CHECK(nlohmann::json::parse(iso.out)["isomorphic"] == false);
}

TEST_CASE("sl2 demo single and tensor modes") {
  RunResult r = run_cli("sl2 demo --lambda 1/3 --parity odd --window 9");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["bracket_relations_ok"] == true);
  CHECK(j["s_x_intertwines"] == true);
  CHECK(j["induced_split"]["projectors_idempotent"] == true);

  RunResult t = run_cli("sl2 demo --lambda 1/3 --lambda2 1/5 --parity odd --window 4 --tensor");
  REQUIRE(t.exit_code == 0);
  auto jt = nlohmann::json::parse(t.out);
  CHECK(jt["beta"]["m"] == 2);
  CHECK(jt["summary"]["component_count"] == 2);
  CHECK(jt["summary"]["class_count"] == 1);
}

TEST_CASE("frobenius and g2 suites run green") {
  RunResult r = run_cli("rep check-frobenius --suite");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_equal"] == true);
  CHECK(j["models"].size() >= 10);

  RunResult g = run_cli("rep check-g2 --suite");
  REQUIRE(g.exit_code == 0);
  CHECK(nlohmann::json::parse(g.out)["all_ok"] == true);
}
