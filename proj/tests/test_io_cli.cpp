#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "grpdim/errors.hpp"
#include "grpdim/finite_group.hpp"
#include "grpdim/graph_builders.hpp"
#include "grpdim/graph_io.hpp"
#include "grpdim/order_profile.hpp"

using namespace grpdim;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& tag) {
  static int counter = 0;
  return "/tmp/grpdim_test_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = temp_path("out");
  const std::string cmd = std::string(GRPDIM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.output = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

std::string table_file(const std::string& descriptor) {
  const FiniteGroup g = build_group(descriptor);
  const std::string path = temp_path("table");
  std::ofstream out(path);
  out << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) out << g.mul(i, j) << ' ';
    out << '\n';
  }
  return path;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  for (const char* name : {"Z12", "Q8", "S3"}) {
    const FiniteGroup g = build_group(name);
    for (auto family : {GraphFamily::power, GraphFamily::enhanced, GraphFamily::supergraph,
                        GraphFamily::reduced_power}) {
      const SimpleGraph graph = build_graph(g, family);
      const SimpleGraph back = graph_from_json(graph_to_json(graph));
      CAPTURE(name);
      CHECK(back.vertex_count() == graph.vertex_count());
      CHECK(back.edge_count() == graph.edge_count());
      for (int u = 0; u < graph.vertex_count(); ++u)
        for (int v = u + 1; v < graph.vertex_count(); ++v)
          CHECK(back.adjacent(u, v) == graph.adjacent(u, v));
    }
  }
  CHECK(graph_to_json(build_graph(build_group("Z4"), GraphFamily::reduced_power)) ==
        R"({"edges":[[0,1],[0,2],[0,3],[1,2],[2,3]],"n":4})");
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
  CHECK_THROWS_AS(graph_from_json("[1,2]"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,3]]})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"n":3,"edges":[[0,0]]})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"n":-1,"edges":[]})"), InputError);
}

TEST_CASE("DOT output") {
  const FiniteGroup s3 = build_group("S3");
  const auto profile = order_profile(s3);
  const std::string dot =
      graph_to_dot(build_graph(s3, GraphFamily::supergraph), "S3 supergraph", &profile.orders);
  CHECK(dot.find("graph S3_supergraph {") == 0);
  CHECK(dot.find("  0 [label=\"0(o=1)\"];") != std::string::npos);
  CHECK(dot.find("(o=3)") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
  CHECK(dot.rfind("}\n") == dot.size() - 2);

  const std::string plain = graph_to_dot(build_graph(s3, GraphFamily::power), "p");
  CHECK(plain.find("label=\"0\"") != std::string::npos);
  CHECK(plain.find("(o=") == std::string::npos);
}

TEST_CASE("cli compute formula json") {
  const RunResult r = run_cli("compute Z6 --family supergraph --method formula");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["value"] == 4);
  CHECK(j["branch"] == "cyclic_non_p");
  CHECK(j["family"] == "supergraph");
  CHECK(j["n"] == 6);
  CHECK(j["omega_n"] == 2);
  CHECK(j["lambda"] == 2);
  CHECK(j["exponent"] == 6);
  CHECK(j["max_big_omega"] == 2);
  CHECK(j["omega_reduced"] == 2);
  CHECK(j.size() == 9);

  const RunResult p = run_cli("compute Z9 --family supergraph --method formula");
  REQUIRE(p.exit_code == 0);
  const json pj = json::parse(p.output);
  CHECK(pj["branch"] == "p_group");
  CHECK(pj["lambda"].is_null());
}

TEST_CASE("cli compute single engine method") {
  const RunResult r = run_cli("compute Q8 --family reduced_power --method vertexcover");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["group"] == "Q8");
  CHECK(j["family"] == "reduced_power");
  CHECK(j["n"] == 8);
  CHECK(j["method"] == "vertexcover");
  CHECK(j["value"] == 6);
  CHECK(j["witness"].size() == 6);
}

TEST_CASE("cli compute all methods") {
  for (const char* args : {"compute Q8 --family reduced --method all",
                           "compute D12 --family supergraph --method all",
                           "compute Z2xZ4 --family enhanced --method all"}) {
    const RunResult r = run_cli(args);
    CAPTURE(args);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j["match"] == true);
    CHECK(j["results"].size() == 4);
  }
  const RunResult table = run_cli("compute S3 --family supergraph --method all --table");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("all methods agree") != std::string::npos);
}

TEST_CASE("cli exit codes and error messages") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("compute").exit_code == 2);
  CHECK(run_cli("compute Zoo --family power --method oracle").exit_code == 2);
  CHECK(run_cli("compute Z6 --family nope --method oracle").exit_code == 2);
  CHECK(run_cli("compute Z6 --family power --method magic").exit_code == 2);
  CHECK(run_cli("verify --max-order 0").exit_code == 2);
  CHECK(run_cli("verify --max-order 1000").exit_code == 2);
  CHECK(run_cli("export Z6 --family power --format yaml").exit_code == 2);

  const RunResult formula = run_cli("compute Z6 --family power --method formula");
  CHECK(formula.exit_code == 2);
  CHECK(formula.output.find("diameter2, vertexcover, or oracle") != std::string::npos);

  const RunResult cap = run_cli("compute S4 --family power --method oracle");
  CHECK(cap.exit_code == 2);
  CHECK(cap.output.find("use the vertexcover method instead") != std::string::npos);
}

TEST_CASE("cli oracle cap environment override") {
  const RunResult blocked = run_cli("compute D18 --family supergraph --method oracle");
  CHECK(blocked.exit_code == 2);
  const RunResult raised =
      run_cli("compute D18 --family supergraph --method oracle --oracle-cap 18");
  REQUIRE(raised.exit_code == 0);
  CHECK(json::parse(raised.output)["value"] == 16);

  const std::string out_path = temp_path("env");
  const std::string cmd = std::string("GRPDIM_ORACLE_CAP=18 ") + GRPDIM_CLI_PATH +
                          " compute D18 --family supergraph --method oracle > " + out_path +
                          " 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(json::parse(slurp(out_path))["value"] == 16);
  std::remove(out_path.c_str());
}

TEST_CASE("cli verify") {
  const std::string csv_path = temp_path("csv");
  const std::string json_path = temp_path("json");
  const RunResult r = run_cli("verify --max-order 10 --csv " + csv_path + " --json " + json_path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("0 mismatches") != std::string::npos);

  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("group,n,family,method,value,branch,millis,match\n", 0) == 0);
  CHECK(csv.find("\nZ6,6,supergraph,formula,4,cyclic_non_p,") != std::string::npos);
  CHECK(csv.find(",power,formula,skipped,") != std::string::npos);

  const json report = json::parse(slurp(json_path));
  CHECK(report["summary"]["mismatches"] == 0);
  const int groups = 20;  // catalog members of order at most 10
  CHECK(report["summary"]["total"] == 4 * groups);
  CHECK(report["rows"].size() == 4 * groups);
  for (const auto& row : report["rows"]) CHECK(row["match"] == true);

  std::remove(csv_path.c_str());
  std::remove(json_path.c_str());

  const RunResult narrow =
      run_cli("verify --max-order 16 --families supergraph,reduced --methods formula,vertexcover "
              "--csv " + temp_path("n1") + " --json " + temp_path("n2"));
  CHECK(narrow.exit_code == 0);
}

TEST_CASE("cli export") {
  const std::string dot_path = temp_path("dot");
  const RunResult dot =
      run_cli("export Z4 --family reduced --format dot -o " + dot_path);
  REQUIRE(dot.exit_code == 0);
  const std::string text = slurp(dot_path);
  CHECK(text.find("graph Z4_reduced_power {") != std::string::npos);
  CHECK(text.find("0 [label=\"0(o=1)\"]") != std::string::npos);
  std::remove(dot_path.c_str());

  const RunResult js = run_cli("export Z4 --family reduced --format json");
  REQUIRE(js.exit_code == 0);
  const SimpleGraph back = graph_from_json(js.output);
  CHECK(back.vertex_count() == 4);
  CHECK(back.edge_count() == 5);
}

TEST_CASE("cli accepts multiplication table files") {
  const std::string path = table_file("Z5");
  const RunResult r = run_cli("compute file:" + path + " --family enhanced --method all");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["match"] == true);
  CHECK(j["results"][0]["value"] == 4);
  CHECK(j["results"][0]["branch"] == "cyclic");
  std::remove(path.c_str());

  CHECK(run_cli("compute file:/nonexistent --family power --method oracle").exit_code == 2);
}
