#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using std::string;

namespace {

struct RunResult {
  int exit_code;
  string output;
};

RunResult run_cli(const string& args, const string& stdin_text = "") {
  string in_path = "/tmp/knot_cli_test_in.json";
  string out_path = "/tmp/knot_cli_test_out.txt";
  string cmd = string(KNOT_CLI_PATH) + " " + args;
  if (!stdin_text.empty()) {
    std::ofstream f(in_path);
    f << stdin_text;
    f.close();
    cmd += " < " + in_path;
  }
  cmd += " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WEXITSTATUS(status);
  std::ifstream f(out_path);
  std::ostringstream os;
  os << f.rdbuf();
  return {code, os.str()};
}

}  // namespace

TEST_CASE("zoo command") {
  RunResult r = run_cli("zoo \"P'2\" --p 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"order\": 27") != string::npos);
  CHECK(r.output.find("\"exponent\": 3") != string::npos);

  RunResult r2 = run_cli("zoo P2 --p 3");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"order\": 27") != string::npos);
  CHECK(r2.output.find("\"exponent\": 9") != string::npos);

  RunResult r3 =
      run_cli("zoo semidirect-std --p 3 --mats \"[[1,1],[0,1]],[[0,-1],[1,0]]\"");
  CHECK(r3.exit_code == 0);
  CHECK(r3.output.find("\"order\": 216") != string::npos);

  CHECK(run_cli("zoo bogus").exit_code == 2);
}

TEST_CASE("sha exit codes") {
  // star group with cyclic-only decomposition data: Z/p, exit 10
  string star_doc =
      "{\"group\":{\"construction\":\"semidirect-std\",\"p\":3,"
      "\"mats\":[[[1,1],[0,1]],[[0,-1],[1,0]]]},"
      "\"stabilizer_point\":0,\"methods\":[\"classifier\",\"cohomology\"]}";
  RunResult r = run_cli("sha -", star_doc);
  CHECK(r.exit_code == 10);
  CHECK(r.output.find("\"decision\": \"Z/p\"") != string::npos);
  CHECK(r.output.find("\"sha_invariants\": [\n    3\n  ]") != string::npos);

  // C9: trivial, exit 0
  string c9_doc =
      "{\"group\":{\"construction\":\"Pn\",\"p\":3,\"n\":1},"
      "\"stabilizer_point\":0}";
  RunResult r2 = run_cli("sha -", c9_doc);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"decision\": \"trivial\"") != string::npos);

  // malformed generator array: exit 2
  string bad_doc = "{\"group\":{\"degree\":9,\"generators\":[[0,1]]}}";
  CHECK(run_cli("sha -", bad_doc).exit_code == 2);
}

TEST_CASE("sha with explicit decomposition groups") {
  // the translation (C_3)^2 inside the order-216 group kills the obstruction
  string doc =
      "{\"group\":{\"construction\":\"semidirect-std\",\"p\":3,"
      "\"mats\":[[[1,1],[0,1]],[[0,-1],[1,0]]]},"
      "\"stabilizer_point\":0,"
      "\"decomposition_groups\":[[[1,2,0,4,5,3,7,8,6],[3,4,5,6,7,8,0,1,2]]],"
      "\"methods\":[\"classifier\",\"cohomology\"]}";
  RunResult r = run_cli("sha -", doc);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"contains_cp2\": true") != string::npos);
}

TEST_CASE("byte stable output") {
  string doc =
      "{\"group\":{\"construction\":\"P'n\",\"p\":3,\"n\":2},"
      "\"stabilizer_point\":0,\"methods\":[\"cohomology\"]}";
  RunResult a = run_cli("sha -", doc);
  RunResult b = run_cli("sha -", doc);
  CHECK(a.exit_code == 10);
  CHECK(a.output == b.output);
}

TEST_CASE("h1pic and adequacy commands") {
  string doc =
      "{\"group\":{\"construction\":\"P'n\",\"p\":3,\"n\":1},"
      "\"stabilizer_point\":0}";
  RunResult r = run_cli("h1pic -", doc);
  CHECK(r.exit_code == 10);

  string doc2 =
      "{\"group\":{\"construction\":\"P'n\",\"p\":3,\"n\":2},"
      "\"stabilizer_point\":0,"
      "\"decomposition_groups\":[[[1,2,0,4,5,3,7,8,6]]]}";
  RunResult r2 = run_cli("adequacy -", doc2);
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"adequate\": false") != string::npos);
}

TEST_CASE("env cap") {
  string doc =
      "{\"group\":{\"construction\":\"semidirect-std\",\"p\":3,"
      "\"mats\":[[[1,1],[0,1]],[[0,-1],[1,0]]]},\"stabilizer_point\":0}";
  std::ofstream f("/tmp/knot_cap_in.json");
  f << doc;
  f.close();
  string cmd = string("KNOT_CAP=10 ") + KNOT_CLI_PATH +
               " sha /tmp/knot_cap_in.json > /tmp/knot_cap_out.txt 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("fast p-part flag matches the default path") {
  string doc =
      "{\"group\":{\"construction\":\"semidirect-std\",\"p\":3,"
      "\"mats\":[[[0,-1],[1,0]]]},"
      "\"stabilizer_point\":0,\"methods\":[\"cohomology\"]}";
  RunResult slow = run_cli("sha -", doc);
  RunResult fast = run_cli("sha - --fast-p-part", doc);
  CHECK(slow.exit_code == fast.exit_code);
  CHECK(slow.output.substr(slow.output.find("\"decision\"")) ==
        fast.output.substr(fast.output.find("\"decision\"")));
}
