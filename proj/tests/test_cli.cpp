// End-to-end tests against the real binary; its path arrives in THOMASON_CLI.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace {

std::string binary_path() {
  const char* env = std::getenv("THOMASON_CLI");
  REQUIRE(env != nullptr);
  return env;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string cmd = binary_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path tmpdir() {
  static std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "thomason-cli-tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  auto path = tmpdir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

const char* kFrame = R"({"kind":"kripke_frame","worlds":["0","1"],"relation":[["0","1"],["1","1"]]})";
const char* kChain = R"({"kind":"csl","elements":["0","1","m"],"leq":[["0","m"],["m","1"]]})";

} // namespace

TEST_CASE("validate accepts good documents and rejects bad ones") {
  CHECK(run("validate " + write_file("frame.json", kFrame)).exit_code == 0);
  CHECK(run("validate " + write_file("chain.json", kChain)).exit_code == 0);

  RunResult bad = run("validate " + write_file("cycle.json",
      R"({"kind":"csl","elements":["a","b"],"leq":[["a","b"],["b","a"]]})"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("cycle") != std::string::npos);

  CHECK(run("validate " + write_file("junk.json", "not json")).exit_code == 2);
  CHECK(run("validate /nonexistent/file.json").exit_code == 2);

  // modal documents are validated as modal operators, not just parsed.
  // □⊥ = p conflicts with □q = q, since ⊥ = ⊥∧q forces □⊥ ≤ □q.
  RunResult modal_bad = run("validate " + write_file("modalbad.json",
      R"({"kind":"modal_algebra","atoms":["p","q"],)"
      R"("box":{"":"p","p":"p","q":"q","p,q":"p,q"}})"));
  CHECK(modal_bad.exit_code == 2);
}

TEST_CASE("dual of the two-world frame matches the known box table") {
  std::string frame = write_file("frame.json", kFrame);
  RunResult r = run("dual " + frame);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"modal_algebra\"") != std::string::npos);
  CHECK(r.output.find("\"1\": \"0,1\"") != std::string::npos);   // □{1} = ⊤
  CHECK(r.output.find("\"0\": \"\"") != std::string::npos);      // □{0} = ⊥
  CHECK(r.output.find("\"0,1\": \"0,1\"") != std::string::npos); // □⊤ = ⊤

  // Dualize back: the relation returns unchanged.
  std::string modal = write_file("frame_dual.json", r.output);
  RunResult back = run("dual " + modal);
  REQUIRE(back.exit_code == 0);
  CHECK(back.output.find("\"kripke_frame\"") != std::string::npos);
  RunResult orig = run("dual " + frame + " --out " + (tmpdir() / "viafile.json").string());
  REQUIRE(orig.exit_code == 0);
  CHECK(run("dual " + (tmpdir() / "viafile.json").string()).output == back.output);

  // Dualizing a csl document is a usage error.
  CHECK(run("dual " + write_file("chain.json", kChain)).exit_code == 2);
}

TEST_CASE("roundtrip emits an isomorphism witness") {
  RunResult r = run("roundtrip " + write_file("frame.json", kFrame));
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"map\"") != std::string::npos);
  CHECK(r.output.find("\"pairs\"") != std::string::npos);

  std::string modal = run("dual " + write_file("frame.json", kFrame)).output;
  RunResult rm = run("roundtrip " + write_file("modal.json", modal));
  CHECK(rm.exit_code == 0);
}

TEST_CASE("check-map covers the exit-code contract") {
  std::string frame = write_file("frame.json", kFrame);
  std::string pt = write_file("pt.json",
      R"({"kind":"kripke_frame","worlds":["w"],"relation":[]})");
  std::string loop = write_file("loop.json",
      R"({"kind":"kripke_frame","worlds":["w"],"relation":[["w","w"]]})");
  std::string collapse = write_file("collapse.json",
      R"({"kind":"map","pairs":[["0","w"],["1","w"]]})");

  // A p-morphism onto the reflexive point: ok.
  CHECK(run("check-map --kind pmorphism " + frame + " " + loop + " " + collapse).exit_code == 0);
  // Onto the irreflexive point: verdict failure with a witness world.
  RunResult fail = run("check-map --kind pmorphism " + frame + " " + pt + " " + collapse);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("fails at 0") != std::string::npos);
  // coalg is the same condition.
  CHECK(run("check-map --kind coalg " + frame + " " + loop + " " + collapse).exit_code == 0);
  CHECK(run("check-map --kind coalg " + frame + " " + pt + " " + collapse).exit_code == 1);

  // Malformed map (missing a world): input error.
  std::string partial = write_file("partial.json", R"({"kind":"map","pairs":[["0","w"]]})");
  CHECK(run("check-map --kind pmorphism " + frame + " " + loop + " " + partial).exit_code == 2);
  // Unknown kind is rejected by the parser.
  CHECK(run("check-map --kind mystery " + frame + " " + loop + " " + collapse).exit_code != 0);
}

TEST_CASE("check-map on lattice and algebra homs") {
  std::string chain = write_file("chain.json", kChain);
  std::string two = write_file("two.json",
      R"({"kind":"csl","elements":["0","1"],"leq":[["0","1"]]})");
  std::string sigma = write_file("sigma.json",
      R"({"kind":"map","pairs":[["0","0"],["m","1"],["1","1"]]})");
  std::string bad = write_file("badmap.json",
      R"({"kind":"map","pairs":[["0","1"],["m","0"],["1","1"]]})");
  CHECK(run("check-map --kind cslhom " + chain + " " + two + " " + sigma).exit_code == 0);
  RunResult r = run("check-map --kind cslhom " + chain + " " + two + " " + bad);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("fails") != std::string::npos);

  // cabahom: identity table on the 1-atom algebra, then a constant-top table.
  std::string modal1 = write_file("modal1.json",
      R"({"kind":"modal_algebra","atoms":["p"],"box":{"":"","p":"p"}})");
  std::string ident = write_file("ident.json", R"({"kind":"map","pairs":[["","" ],["p","p"]]})");
  std::string consttop = write_file("consttop.json",
      R"({"kind":"map","pairs":[["","p"],["p","p"]]})");
  CHECK(run("check-map --kind cabahom " + modal1 + " " + modal1 + " " + ident).exit_code == 0);
  CHECK(run("check-map --kind cabahom " + modal1 + " " + modal1 + " " + consttop).exit_code == 1);

  // halg: dual atom maps between the boxes of the loop and the point frames.
  std::string mloop = write_file("mloop.json",
      R"({"kind":"modal_algebra","atoms":["w"],"box":{"":"","w":"w"}})");
  std::string mpt = write_file("mpt.json",
      R"({"kind":"modal_algebra","atoms":["w"],"box":{"":"w","w":"w"}})");
  std::string idw = write_file("idw.json", R"({"kind":"map","pairs":[["w","w"]]})");
  CHECK(run("check-map --kind halg " + mloop + " " + mloop + " " + idw).exit_code == 0);
  CHECK(run("check-map --kind halg " + mloop + " " + mpt + " " + idw).exit_code == 1);
}

TEST_CASE("left-adjoint prints both constructions and the bijection") {
  std::string chain = write_file("chain.json", kChain);
  RunResult r = run("left-adjoint " + chain + " --method both");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("8 valuations, 3 survive") != std::string::npos);
  CHECK(r.output.find("iota(m) = {0,m}") != std::string::npos);
  CHECK(r.output.find("isomorphism") != std::string::npos);
  CHECK(run("left-adjoint " + chain + " --method powerset").exit_code == 0);
  CHECK(run("left-adjoint " + chain + " --method congruence").exit_code == 0);
  CHECK(run("left-adjoint " + write_file("frame.json", kFrame)).exit_code == 2);
}

TEST_CASE("free-caba reports sizes and the universal property") {
  RunResult r = run("free-caba 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("4 atoms, carrier 16") != std::string::npos);

  std::string modal1 = write_file("modal1.json",
      R"({"kind":"modal_algebra","atoms":["p"],"box":{"":"","p":"p"}})");
  std::string gens = write_file("gens.json", R"({"kind":"map","pairs":[["g0","p"],["g1",""]]})");
  RunResult ext = run("free-caba 2 --target " + modal1 + " --gen " + gens);
  REQUIRE(ext.exit_code == 0);
  CHECK(ext.output.find("universal extension ok") != std::string::npos);
  CHECK(ext.output.find("uniqueness: 1 extension(s) found") != std::string::npos);

  CHECK(run("free-caba 9").exit_code == 2);  // beyond the powerset bound
  CHECK(run("free-caba 2 --target " + modal1).exit_code == 2);  // --gen missing
}

TEST_CASE("suite runner is deterministic and honors its flags") {
  RunResult a = run("suite --seed 7 --max-size 4 --cases 6 --json");
  RunResult b = run("suite --seed 7 --max-size 4 --cases 6 --json");
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"ms\": 0") != std::string::npos);
  CHECK(a.output.find("\"failures\": []") != std::string::npos);

  RunResult only = run("suite --only duality --seed 7 --max-size 4 --cases 4");
  REQUIRE(only.exit_code == 0);
  CHECK(only.output.find("duality:") != std::string::npos);
  CHECK(only.output.find("finset:") == std::string::npos);

  CHECK(run("suite --only nonsense").exit_code == 2);
}
