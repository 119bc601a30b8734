#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  return {WEXITSTATUS(rc), out};
}

std::string data(const std::string& name) {
  return std::string(DATA_DIR) + "/" + name;
}

json payload_of(const RunResult& r) {
  REQUIRE(r.status == 0);
  json doc = json::parse(r.out);
  return doc["payload"];
}

}  // namespace

TEST_CASE("analyze reports the three element chain faithfully") {
  RunResult r = run_cli("analyze --json " + data("m3.json"));
  json p = payload_of(r);
  CHECK(p["monoid"]["size"] == 3);
  CHECK(p["relabeling"].empty());
  CHECK(p["topos"]["de_morgan"]["holds"] == false);
  CHECK(p["topos"]["local"]["holds"] == true);
  CHECK(p["topos"]["boolean_atomic"]["holds"] == false);
  CHECK(p["topos"]["strongly_compact"]["holds"] == true);
  CHECK(p["crosschecks"]["all_agree"] == true);
  CHECK(p["profile"]["is_group"] == false);

  json doc = json::parse(r.out);
  CHECK(doc["command"] == "analyze " + data("m3.json"));
  CHECK(doc["inputs"].size() == 1);
  CHECK(doc["inputs"][0]["digest"].get<std::string>().size() == 16);
}

TEST_CASE("analyze recognizes a group as boolean and two valued") {
  json p = payload_of(run_cli("analyze --json " + data("z2.json")));
  CHECK(p["profile"]["is_group"] == true);
  CHECK(p["topos"]["boolean_atomic"]["holds"] == true);
  CHECK(p["topos"]["two_valued"]["holds"] == true);
  CHECK(p["crosschecks"]["all_agree"] == true);
}

TEST_CASE("a shifted identity is relabeled to index zero and reported") {
  RunResult r = run_cli("analyze --json " + data("m3_relabeled.json"));
  json doc = json::parse(r.out);
  json p = doc["payload"];
  json canonical = json::parse(
      "[[0, 1, 2], [1, 1, 1], [2, 2, 2]]");
  CHECK(p["monoid"]["table"] == canonical);
  CHECK(p["relabeling"] == json::parse("[1, 0, 2]"));
  REQUIRE(doc["warnings"].size() == 1);
  CHECK(doc["warnings"][0].get<std::string>().find("relabeled") !=
        std::string::npos);
}

TEST_CASE("congruence lattices of the worked examples") {
  json p = payload_of(run_cli("congruences --json " + data("m3.json")));
  CHECK(p["lattice"]["nodes"] == 3);
  CHECK(p["lattice"]["cover_edges"] == json::parse("[[0, 1], [1, 2]]"));
  CHECK(p["category"]["objects"] == 3);
  CHECK(p["category"]["composition_closed"] == true);
  CHECK(p["congruences"][0]["class_count"] == 3);
  CHECK(p["congruences"][2]["class_count"] == 1);

  CHECK(payload_of(run_cli("congruences --json " +
                           data("trivial.json")))["lattice"]["nodes"] == 1);
  CHECK(payload_of(run_cli("congruences --json " +
                           data("z2.json")))["lattice"]["nodes"] == 2);
}

TEST_CASE("the worked topology completes to the two element chain") {
  json p = payload_of(run_cli("complete --json " + data("m3.json") + " " +
                              data("m3_topology.json")));
  CHECK(p["action_topology"]["opens"] ==
        json::parse("[[], [0], [1, 2], [0, 1, 2]]"));
  CHECK(p["action_topology"]["coarsens_input"] == true);
  CHECK(p["action_topology"]["idempotent"] == true);
  CHECK(p["completion"]["size"] == 2);
  CHECK(p["completion"]["unit"] == json::parse("[0, 1, 1]"));
  CHECK(p["completion"]["unit_injective"] == false);
  CHECK(p["powder"]["size"] == 2);
  CHECK(p["powder"]["t0"] == true);
  CHECK(p["agreement"]["powder_isomorphic_to_completion"] == true);
}

TEST_CASE("discrete and indiscrete inputs bound the completion") {
  json disc = payload_of(run_cli("complete --json " + data("m3.json") + " " +
                                 data("m3_discrete.json")));
  CHECK(disc["completion"]["size"] == 3);
  CHECK(disc["completion"]["unit_injective"] == true);
  CHECK(disc["base_reduction"]["discrete"] == true);

  json indisc = payload_of(run_cli("complete --json " + data("m3.json") +
                                   " " + data("m3_indiscrete.json")));
  CHECK(indisc["completion"]["size"] == 1);
  CHECK(indisc["powder"]["size"] == 1);
}

TEST_CASE("morita equivalence is isomorphism with an audit trail") {
  json p = payload_of(run_cli("morita --json " + data("m3.json") + " " +
                              data("m3_relabeled.json")));
  CHECK(p["equivalent"] == true);
  CHECK(!p["isomorphism"].is_null());

  p = payload_of(run_cli("morita --json " + data("m3.json") + " " +
                         data("z3.json")));
  CHECK(p["equivalent"] == false);
  CHECK(p["isomorphism"].is_null());
}

TEST_CASE("the two element transformation monoid against the point") {
  json p = payload_of(run_cli("morita --json " + data("t2.json") + " " +
                              data("trivial.json")));
  CHECK(p["equivalent"] == false);
  bool trivial_local_at_constant = false;
  for (const json& entry : p["left"]["idempotent_audit"])
    if (entry["local_size"] == 1 &&
        entry["local_isomorphic_to_ambient"] == false)
      trivial_local_at_constant = true;
  CHECK(trivial_local_at_constant);
  CHECK(p["right"]["idempotent_audit"][0]["local_size"] == 1);
}

TEST_CASE("monogenic classify splits the sample into two components") {
  json p = payload_of(
      run_cli("monogenic classify --json " + data("step_sample.json")));
  CHECK(p["component_count"] == 2);
  CHECK(p["components"][0]["members"] == json::parse("[0, 1, 2]"));
  CHECK(p["components"][0]["tail"] == 1);
  CHECK(p["components"][0]["cycle"] == 2);
  CHECK(p["components"][0]["single_orbit"] == true);
  CHECK(p["components"][1]["members"] == json::parse("[3, 4]"));
  CHECK(p["components"][1]["cycle"] == 1);
  CHECK(p["elements"][0]["tail"] == 1);
  CHECK(p["elements"][1]["tail"] == 0);
}

TEST_CASE("a twenty step order chain leaves no small problem open") {
  json p = payload_of(run_cli("fraisse run lin_orders --steps 20 --json"));
  CHECK(p["deficit"]["open_count"] == 0);
  CHECK(p["deficit"]["stage_bound"] == 5);
  CHECK(p["deficit"]["problem_bound"] == 3);
  CHECK(p["stages"].size() == 21);
  for (const json& u : p["universality"]) {
    REQUIRE(!u["stage"].is_null());
    CHECK(u["stage"].get<int>() <= 5);
  }
}

TEST_CASE("fraisse run rejects unknown systems with the validation code") {
  RunResult r = run_cli("fraisse run nosuch --json");
  CHECK(r.status == 2);
  json doc = json::parse(r.out);
  CHECK(doc["error"]["type"] == "validation");
}

TEST_CASE("ofs-validate pins the covering failure of the shared point") {
  json p = payload_of(
      run_cli("fraisse ofs-validate --json " + data("nonjcp.json")));
  CHECK(p["factorization"]["ok"] == true);
  CHECK(p["uniqueness"]["ok"] == true);
  CHECK(p["lifting"]["ok"] == true);
  CHECK(p["stability"]["ok"] == true);
  CHECK(p["joint_covering"]["ok"] == false);
  CHECK(p["joint_covering"]["uncovered"] == json::parse("[\"X\", \"Y\"]"));
  CHECK(p["all_ok"] == false);
}

TEST_CASE("reports are byte identical across repeated runs") {
  std::vector<std::string> cases = {
      "analyze --json " + data("m3.json"),
      "fraisse run lin_orders --steps 12 --json",
      "complete " + data("m3.json") + " " + data("m3_topology.json"),
      "congruences --json " + data("t2.json")};
  for (const std::string& args : cases) {
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    if (args.find("--json") != std::string::npos) {
      json doc = json::parse(a.out);
      CHECK(doc.dump(2) + "\n" == a.out);
    }
  }
}

TEST_CASE("canonical monoid blocks reparse to themselves") {
  json first = payload_of(run_cli("analyze --json " + data("m3_relabeled.json")));
  auto tmp = std::filesystem::temp_directory_path() / "monoidlab_echo.json";
  {
    std::ofstream out(tmp);
    out << first["monoid"].dump() << "\n";
  }
  json second = payload_of(run_cli("analyze --json " + tmp.string()));
  CHECK(second["monoid"] == first["monoid"]);
  CHECK(second["relabeling"].empty());
  first.erase("relabeling");
  second.erase("relabeling");
  CHECK(second == first);
  std::filesystem::remove(tmp);
}

TEST_CASE("oversized inputs exit with the resource code") {
  RunResult r = run_cli("congruences --json " + data("leftzero10.json"));
  CHECK(r.status == 3);
  json doc = json::parse(r.out);
  CHECK(doc["error"]["type"] == "cap");
}

TEST_CASE("caps can be overridden from the command line") {
  RunResult r = run_cli("analyze --json --cap-mset-size 3 " + data("m3.json"));
  CHECK(r.status == 0);
  CHECK(payload_of(r)["crosschecks"]["corpus_cap"] == 3);
}

TEST_CASE("parse failures exit with the validation code and a location") {
  RunResult r = run_cli("analyze --json " + data("malformed.json"));
  CHECK(r.status == 2);
  json doc = json::parse(r.out);
  std::string msg = doc["error"]["message"].get<std::string>();
  CHECK(msg.find("row 1") != std::string::npos);

  r = run_cli("analyze --json " + data("nonassociative.json"));
  CHECK(r.status == 2);
  doc = json::parse(r.out);
  msg = doc["error"]["message"].get<std::string>();
  CHECK(msg.find("associativity fails") != std::string::npos);

  r = run_cli("analyze " + data("malformed.json"));
  CHECK(r.status == 2);
  CHECK(r.out.empty());
}

TEST_CASE("human output carries the same verdicts in prose") {
  RunResult r = run_cli("analyze " + data("m3.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("command: analyze") != std::string::npos);
  CHECK(r.out.find("de_morgan") != std::string::npos);
  CHECK(r.out.find("fnv1a") != std::string::npos);
  CHECK(r.out.find("elapsed") == std::string::npos);
}
