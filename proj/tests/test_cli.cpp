#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

std::string bin() {
  const char* b = std::getenv("WEYLKIT_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string specs() {
  const char* s = std::getenv("WEYLKIT_SPECS");
  REQUIRE(s != nullptr);
  return s;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  std::string outf = "/tmp/weylkit_test_out.txt";
  std::string errf = "/tmp/weylkit_test_err.txt";
  int rc = std::system(
      (bin() + " " + args + " >" + outf + " 2>" + errf).c_str());
  RunResult r;
  r.code = WEXITSTATUS(rc);
  r.out = slurp(outf);
  r.err = slurp(errf);
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("classify artifact and exit codes") {
  RunResult r = run("classify " + specs() + "/b2.json");
  CHECK(r.code == 0);
  json a = json::parse(r.out);
  CHECK(a["type"] == "spherical");
  CHECK(a["crystallographic"] == true);
  CHECK(a["coxeter_matrix"][0][1] == 4);

  // decomposable inputs classify blockwise
  write_file("/tmp/cli_red.json",
             R"({"gcm": [[2, -1, 0], [-1, 2, 0], [0, 0, 2]]})");
  RunResult red = run("classify /tmp/cli_red.json");
  CHECK(red.code == 0);
  json ra = json::parse(red.out);
  CHECK(ra["type"] == "reducible");
  CHECK(ra["blocks"].size() == 2);
  CHECK(ra["blocks"][0]["type"] == "spherical");
  CHECK(ra["blocks"][0]["vertices"][0] == 1);  // 1-based

  // malformed matrix: domain error on stderr, exit 1
  write_file("/tmp/cli_bad.json", R"({"gcm": [[2, 1], [-1, 2]]})");
  RunResult bad = run("classify /tmp/cli_bad.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  json err = json::parse(bad.err);
  CHECK(err["error"]["code"] == "BadSign");

  // usage problems exit 2
  CHECK(run("classify").code == 2);
  CHECK(run("no-such-command").code == 2);
  RunResult usage = run("classify");
  CHECK(json::parse(usage.err)["error"]["code"] == "UsageError");

  // unreadable file
  CHECK(run("classify /tmp/definitely_missing.json").code == 1);
}

TEST_CASE("roots length and straight support 1-based words") {
  RunResult r = run("length " + specs() + "/aff_a1.json --word \"1 2 1 2\"");
  CHECK(r.code == 0);
  json a = json::parse(r.out);
  CHECK(a["length"] == 4);
  CHECK(a["reduced_word"] == "1 2 1 2");

  RunResult bad = run("length " + specs() + "/aff_a1.json --word \"1 3\"");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.err)["error"]["code"] == "BadGenerator");

  RunResult roots = run("roots " + specs() + "/aff_a1.json --depth 4");
  json ra = json::parse(roots.out);
  CHECK(ra["count"] == 8);
  CHECK(ra["roots"][0]["layer"] == 0);

  RunResult st =
      run("straight " + specs() + "/indef_free3.json --word \"1 2 3\" --n 5");
  json sa = json::parse(st.out);
  CHECK(sa["straight_up_to"] == true);
  CHECK(sa["power_lengths"].size() == 5);

  RunResult cert = run("straight " + specs() +
                       "/indef_free3.json --word \"1 2 3\" --n 5 --certify");
  json ca = json::parse(cert.out);
  CHECK(ca["certificate"]["verdict"] == "CertifiedStraight");
}

TEST_CASE("graph product subcommands") {
  RunResult nf = run("gp-normal " + specs() +
                     "/gp_p4_c2.json --word \"b:1 a:1 b:1\"");
  CHECK(nf.code == 0);
  CHECK(json::parse(nf.out)["normal_form"] == "a:1");

  RunResult ball = run("gp-ball " + specs() + "/gp_c3c3.json --radius 3");
  CHECK(json::parse(ball.out)["count"] == 29);

  RunResult hull = run("gp-hull " + specs() +
                       "/gp_p4_c2.json --seed \"\" --seed \"a:1 c:1\"");
  CHECK(json::parse(hull.out)["size"] == 3);

  RunResult wpd = run("gp-wpd " + specs() +
                      "/gp_p4_c2.json --h \"a:1 c:1\" --d 2 --m 1");
  json w = json::parse(wpd.out);
  CHECK(w["complete"] == true);
  CHECK(w["p_size"] == 2);

  RunResult syl = run("gp-normal " + specs() +
                      "/gp_p4_c2.json --word \"a:9\"");
  CHECK(syl.code == 1);
  CHECK(json::parse(syl.err)["error"]["code"] == "BadSyllable");
}

TEST_CASE("artifacts are canonical json plus newline, --out mirrors stdout") {
  std::string outfile = "/tmp/cli_artifact.json";
  std::remove(outfile.c_str());
  RunResult r = run("--out " + outfile + " classify " + specs() + "/g2.json");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(outfile));
  CHECK(r.out.back() == '\n');
  std::string body = r.out.substr(0, r.out.size() - 1);
  CHECK(body == json::parse(body).dump());
}

TEST_CASE("witness and verify round trip through files") {
  std::string cert = "/tmp/cli_cert.json";
  RunResult w = run("--out " + cert + " witness " + specs() +
                    "/gp_p4_c2.json");
  CHECK(w.code == 0);
  CHECK(json::parse(w.out)["verdict"] == "AcylindricallyHyperbolic");

  RunResult v = run("verify " + cert + " " + specs() + "/gp_p4_c2.json");
  CHECK(v.code == 0);
  json va = json::parse(v.out);
  CHECK(va["ok"] == true);
  CHECK(va["discrepancies"].empty());

  // single byte tamper in the witness word
  std::string text = slurp(cert);
  std::string needle = "\"word\":\"1";
  auto pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text[pos + needle.size()] = '2';
  write_file("/tmp/cli_cert_bad.json", text);
  RunResult bad = run("verify /tmp/cli_cert_bad.json " + specs() +
                      "/gp_p4_c2.json");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["ok"] == false);

  // stricter expected parameters are a mismatch
  RunResult replay = run("verify " + cert + " " + specs() +
                         "/gp_p4_c2.json --root-depth 4");
  CHECK(replay.code == 1);
  json rep = json::parse(replay.out);
  bool param = false;
  for (const auto& d : rep["discrepancies"])
    param = param ||
            d.get<std::string>().find("ParameterMismatch") != std::string::npos;
  CHECK(param);

  // verifying against the wrong spec is a hard error
  RunResult wrong = run("verify " + cert + " " + specs() + "/gp_c3c3.json");
  CHECK(wrong.code == 1);
  CHECK(json::parse(wrong.err)["error"]["code"] == "FingerprintMismatch");
}

TEST_CASE("config file with flag overrides") {
  write_file("/tmp/cli_cfg.json", R"({"root_depth": 5, "hull_window": 6})");
  std::string cert = "/tmp/cli_cfg_cert.json";
  RunResult w = run("--config /tmp/cli_cfg.json --out " + cert + " witness " +
                    specs() + "/gp_p4_c2.json");
  CHECK(w.code == 0);
  json c = json::parse(w.out);
  CHECK(c["parameters"]["root_depth"] == 5);
  CHECK(c["parameters"]["hull_window"] == 6);
  CHECK(c["evidence"]["hull"]["window"] == 6);

  // flags beat the file
  RunResult w2 = run("--config /tmp/cli_cfg.json witness " + specs() +
                     "/gp_p4_c2.json --hull-window 4");
  CHECK(json::parse(w2.out)["parameters"]["hull_window"] == 4);

  // verify needs the same contract the certificate was built with
  RunResult vplain = run("verify " + cert + " " + specs() + "/gp_p4_c2.json");
  CHECK(vplain.code == 1);
  RunResult vcfg = run("--config /tmp/cli_cfg.json verify " + cert + " " +
                       specs() + "/gp_p4_c2.json");
  CHECK(vcfg.code == 0);

  write_file("/tmp/cli_cfg_bad.json", R"({"root_depht": 5})");
  RunResult bad = run("--config /tmp/cli_cfg_bad.json witness " + specs() +
                      "/gp_p4_c2.json");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.err)["error"]["code"] == "InvalidDocument");
}

TEST_CASE("non crystallographic systems reach the cli") {
  RunResult r = run("classify " + specs() + "/noncryst_i2_5.json");
  // classify is gcm-only by contract
  CHECK(r.code == 1);
  RunResult len =
      run("length " + specs() + "/noncryst_i2_5.json --word \"1 2 1 2 1\"");
  CHECK(len.code == 0);
  CHECK(json::parse(len.out)["length"] == 5);
  RunResult roots = run("roots " + specs() + "/noncryst_i2_5.json --depth 2");
  CHECK(roots.code == 1);
  CHECK(json::parse(roots.err)["error"]["code"] == "NotCrystallographic");
}
