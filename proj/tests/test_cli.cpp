#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lqc/io.hpp"

using namespace lqc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lqc_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli generators") {
  auto t = run_json({"gen", "toric", "--n", "2", "--L", "3"});
  CHECK(code_from_json(t).size() == 18);
  CHECK(t["meta"]["seed"] == 1);
  CHECK(t["meta"]["version"] == kVersion);
  CHECK(t["meta"]["params"]["L"] == "3");
  CHECK(t["meta"]["command"] == "gen toric");

  auto x = complex_from_json(run_json({"gen", "torus-complex", "--n", "2", "--L", "3"}));
  CHECK(x.chain_condition_holds());
  CHECK(x.cells(2) == 9);

  auto h = code_from_json(run_json({"gen", "hgp", "--a", "repetition:4", "--b", "repetition:4"}));
  auto direct = hypergraph_product(repetition_checks(4), repetition_checks(4));
  CHECK(h.h1 == direct.h1);
  CHECK(h.h2 == direct.h2);

  auto rc = run_json({"gen", "random-complex", "--triangles", "10", "--seed", "4"});
  CHECK(complex_from_json(rc) == random_connected_2complex(10, 6, 4));
  CHECK(rc["meta"]["seed"] == 4);

  TempDir dir;
  std::ofstream(dir / "h.alist") << "7 3\n3 4\n1 1 2 1 2 2 3\n4 4 4\n1\n2\n1 2\n3\n1 3\n2 3\n1 2 3\n"
                                    "1 3 5 7\n2 3 6 7\n4 5 6 7\n";
  auto steane = code_from_json(run_json({"gen", "hgp", "--a", "alist:" + (dir / "h.alist"), "--b", "hamming:3"}));
  CHECK(steane.h1 == hypergraph_product(hamming_checks(3), hamming_checks(3)).h1);

  CHECK(run({"gen", "hgp", "--a", "golay:3"}).code == 1);
  CHECK(run({"gen", "toric", "--n", "1"}).code == 1);
  CHECK(run({"gen"}).code != 0);
  CHECK(run({"gen", "toric", "--L", "x"}).code != 0);
}

TEST_CASE("cli report, fold, certify, pad, bounds") {
  TempDir dir;
  REQUIRE(run({"gen", "toric", "--n", "2", "--L", "3", "-o", dir / "t3.json"}).code == 0);
  auto r = report_from_json(run_json({"report", dir / "t3.json"}));
  CHECK(r.dim == 2);
  CHECK(r.d == 3u);
  CHECK(r.exact());

  auto hr = report_from_json(
      run_json({"report", "--exact-qubits", "30", "-o", "-", (dir / "t3.json")}));
  CHECK(hr.d == 3u);

  REQUIRE(run({"gen", "toric", "--n", "2", "--L", "8", "-o", dir / "t8.json"}).code == 0);
  REQUIRE(run({"fold", "--n", "2", "--L", "8", "-o", dir / "f8.json"}).code == 0);
  auto cert = run_json({"certify", "--code", dir / "t8.json", "--placement", dir / "f8.json"});
  CHECK(cert["injective"] == true);
  CHECK(cert["check_constant"].get<int>() <= 8);

  REQUIRE(run({"pad", "--code", dir / "t3.json", "--placement", dir / "f3.json", "--volume", "50"}).code == 1);
  REQUIRE(run({"fold", "--n", "2", "--L", "3", "-o", dir / "f3.json"}).code == 0);
  REQUIRE(run({"pad", "--code", dir / "t3.json", "--placement", dir / "f3.json", "--volume", "50", "-o",
               dir / "p.json"})
              .code == 0);
  auto padded = code_from_json(Json::parse(slurp(dir / "p.json"))["code"]);
  CHECK(padded.size() >= 25);
  auto b = run_json({"verify-bounds", "--code", dir / "p.json", "--placement", dir / "p.json"});
  CHECK(b["pass"] == true);
  CHECK(b["dim"] == 2);
  CHECK(b["d"] == 3);

  CHECK(run({"certify", "--code", dir / "t8.json", "--placement", dir / "f3.json"}).code == 1);
  CHECK(run({"certify", "--code", dir / "t8.json"}).code == 1);

  std::ofstream(dir / "broken.json") << "{\n\"h1\": [1,, 2]\n}\n";
  auto bad = run({"report", dir / "broken.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::ofstream(dir / "nofield.json") << R"({"h2": {"rows": 0, "cols": 0, "row_support": []}})";
  CHECK(run({"report", dir / "nofield.json"}).err.find("'h1'") != std::string::npos);
  CHECK(run({"report", dir / "missing.json"}).code == 1);
}

TEST_CASE("cli survey") {
  auto s = run({"survey", "toric", "--n", "2", "--L", "3..6"});
  REQUIRE(s.code == 0);
  std::istringstream in(s.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line.rfind("format_version", 0) != 0) rows.push_back(line);
  CHECK(rows.size() == 4);
  CHECK(s.out.rfind("# {", 0) == 0);

  auto j = run_json({"survey", "hgp", "--L", "3,4", "--format", "json"});
  CHECK(j["rows"].size() == 2);
  CHECK(j["meta"]["params"]["family"] == "hgp");
  CHECK(run({"survey", "moebius"}).code == 1);
  CHECK(run({"survey", "toric", "--L", "6..3"}).code == 1);
  CHECK(run({"survey", "toric", "--format", "xml"}).code != 0);
}

TEST_CASE("cli embedding re-verifies") {
  TempDir dir;
  REQUIRE(run({"gen", "cycle", "--length", "64", "-o", dir / "c.json"}).code == 0);
  REQUIRE(run({"embed", dir / "c.json", "--n", "2", "--seed", "7", "-o", dir / "e.json"}).code == 0);
  auto e = embedded_from_json(Json::parse(slurp(dir / "e.json")));
  CHECK(e.accepted);
  CHECK(e.params.seed == 7);
  auto v = run_json({"certify", "--embedding", dir / "e.json"});
  CHECK(v["verified"] == true);
  CHECK(v["certificate"] == to_json(e.certificate));

  std::ofstream(dir / "params.json") << R"({"n": 2, "delta": 1.0, "seed": 3})";
  REQUIRE(run({"gen", "cycle", "--length", "6", "-o", dir / "h.json"}).code == 0);
  auto hex = run_json({"embed", dir / "h.json", "--params", dir / "params.json"});
  CHECK(hex["params"]["delta"] == 1.0);
  CHECK(hex["params"]["seed"] == 3);
  CHECK(hex["meta"]["seed"] == 3);
  auto over = run_json({"embed", dir / "h.json", "--params", dir / "params.json", "--delta", "2"});
  CHECK(over["params"]["delta"] == 2.0);

  auto tampered = Json::parse(slurp(dir / "e.json"));
  tampered["coords"][0][0] = tampered["coords"][0][0].get<double>() + 500.0;
  std::ofstream(dir / "t.json") << tampered.dump();
  CHECK(run_json({"certify", "--embedding", dir / "t.json"})["verified"] == false);

  CHECK(run({"embed", dir / "h.json", "--n", "1"}).code == 1);
}

TEST_CASE("cli determinism") {
  TempDir dir;
  REQUIRE(run({"gen", "toric", "--n", "2", "--L", "4", "-o", dir / "t.json"}).code == 0);
  REQUIRE(run({"fold", "--n", "2", "--L", "4", "-o", dir / "f.json"}).code == 0);
  REQUIRE(run({"gen", "cycle", "--length", "12", "-o", dir / "c.json"}).code == 0);
  std::vector<std::vector<std::string>> commands = {
      {"gen", "toric", "--n", "3", "--L", "3"},
      {"gen", "hgp", "--a", "repetition:4", "--b", "cycle:3"},
      {"gen", "random-complex", "--triangles", "20", "--seed", "9"},
      {"report", dir / "t.json"},
      {"fold", "--n", "3", "--L", "4"},
      {"certify", "--code", dir / "t.json", "--placement", dir / "f.json"},
      {"pad", "--code", dir / "t.json", "--placement", dir / "f.json", "--volume", "80"},
      {"verify-bounds", "--code", dir / "t.json", "--placement", dir / "f.json"},
      {"embed", dir / "c.json", "--n", "2", "--delta", "1", "--seed", "5"},
      {"survey", "embedded", "--L", "6,8", "--delta", "1"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto with_file = c;
    with_file.insert(with_file.end(), {"-o", dir / "x1"});
    REQUIRE(run(with_file).code == 0);
    with_file.back() = dir / "x2";
    REQUIRE(run(with_file).code == 0);
    CHECK(slurp(dir / "x1") == slurp(dir / "x2"));
    CHECK(slurp(dir / "x1") == a.out);
  }
}
