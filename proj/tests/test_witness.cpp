#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "weylkit/errors.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/witness.hpp"

using namespace weylkit;
using nlohmann::json;

namespace {

json p4_c2_spec() {
  return json::parse(R"({
    "vertices": [
      {"name": "a", "group": {"cyclic": 2}},
      {"name": "b", "group": {"cyclic": 2}},
      {"name": "c", "group": {"cyclic": 2}},
      {"name": "d", "group": {"cyclic": 2}}
    ],
    "edges": [["a","b"], ["b","c"], ["c","d"]]
  })");
}

json two_free_spec() {
  return json::parse(R"({
    "vertices": [
      {"name": "u", "group": {"cyclic": 3}},
      {"name": "v", "group": {"cyclic": 3}}
    ],
    "edges": []
  })");
}

json square_spec() {
  return json::parse(R"({
    "vertices": [
      {"name": "a", "group": {"cyclic": 2}},
      {"name": "b", "group": {"cyclic": 2}},
      {"name": "c", "group": {"cyclic": 2}},
      {"name": "d", "group": {"cyclic": 2}}
    ],
    "edges": [["a","b"], ["b","c"], ["c","d"], ["d","a"]]
  })");
}

json triangle_spec() {
  return json::parse(R"({
    "vertices": [
      {"name": "a", "group": {"cyclic": 2}},
      {"name": "b", "group": {"cyclic": 2}},
      {"name": "c", "group": {"cyclic": 2}}
    ],
    "edges": [["a","b"], ["b","c"], ["a","c"]]
  })");
}

RunConfig small_cfg() {
  RunConfig cfg;
  cfg.root_depth = 6;
  cfg.hull_window = 4;
  return cfg;
}

}  // namespace

TEST_CASE("hypothesis report") {
  gprod::GraphProductSpec spec = io::gp_spec_from_json(p4_c2_spec());
  witness::HypothesisReport hyp = witness::check_hypotheses(spec);
  CHECK(hyp.irreducible);
  CHECK(!hyp.two_vertex_case);
  CHECK(hyp.type == "indefinite");
  Eigen::MatrixXi g = witness::coxeter_gcm_of_graph(spec);
  CHECK(g(0, 0) == 2);
  CHECK(g(0, 1) == 0);   // a, b commute
  CHECK(g(0, 2) == -2);  // a, c do not
  CHECK(hyp.record["blocks"].size() == 1);

  witness::HypothesisReport sq =
      witness::check_hypotheses(io::gp_spec_from_json(square_spec()));
  CHECK(sq.type == "reducible");
  CHECK(!sq.irreducible);
  CHECK(sq.record["blocks"].size() == 2);
  for (const auto& b : sq.record["blocks"]) CHECK(b["type"] == "affine");

  witness::HypothesisReport tri =
      witness::check_hypotheses(io::gp_spec_from_json(triangle_spec()));
  CHECK(tri.type == "spherical");

  witness::HypothesisReport fp =
      witness::check_hypotheses(io::gp_spec_from_json(two_free_spec()));
  CHECK(fp.two_vertex_case);
}

TEST_CASE("witness verdicts per graph shape") {
  json ah = witness::build_witness(p4_c2_spec(), small_cfg());
  CHECK(ah["verdict"] == "AcylindricallyHyperbolic");
  CHECK(ah["witness"]["base"] == "");
  CHECK(!ah["witness"]["word"].get<std::string>().empty());
  CHECK(ah["evidence"]["straightness"]["verdict"] == "CertifiedStraight");
  CHECK(ah["evidence"]["hull"]["base_in_hull"] == true);
  CHECK(ah["evidence"]["hull"]["axis_in_hull"] == true);
  CHECK(ah["evidence"]["separated_walls"]["found"] == true);
  CHECK(ah["parameters"]["k_power"].get<long>() > 0);

  json fp = witness::build_witness(two_free_spec(), small_cfg());
  CHECK(fp["verdict"] == "FreeProductCase");
  CHECK(fp["witness"].is_null());
  CHECK(fp["evidence"]["free_product"]["factors"].size() == 2);

  json sph = witness::build_witness(triangle_spec(), small_cfg());
  CHECK(sph["verdict"] == "Rejected(Spherical)");
  // the BFS oracle closed on the 8 element group
  CHECK(sph["evidence"]["rejection"]["group_order"] == 8);

  json red = witness::build_witness(square_spec(), small_cfg());
  CHECK(red["verdict"] == "Rejected(Reducible)");
  CHECK(red["evidence"]["rejection"]["components"].size() == 2);
}

TEST_CASE("witness power selection through an abelian quotient") {
  RunConfig cfg = small_cfg();
  cfg.w0 = W0Data{};
  cfg.w0->moduli = {2};
  cfg.w0->images = {{"a", {1}}, {"b", {0}}, {"c", {0}}, {"d", {0}}};
  json cert = witness::build_witness(p4_c2_spec(), cfg);
  // the Coxeter word maps to 1 mod 2, so its square is the least kernel power
  CHECK(cert["evidence"]["witness_construction"]["power"] == 2);
  CHECK(cert["verdict"] == "AcylindricallyHyperbolic");

  cfg.w0->images = {{"a", {1}}, {"b", {1}}, {"c", {0}}, {"d", {0}}};
  json even = witness::build_witness(p4_c2_spec(), cfg);
  CHECK(even["evidence"]["witness_construction"]["power"] == 1);

  cfg.w0->images.erase("d");
  CHECK_THROWS_AS((void)witness::build_witness(p4_c2_spec(), cfg),
                  HypothesesFailed);
}

TEST_CASE("certificates are deterministic") {
  json a = witness::build_witness(p4_c2_spec(), small_cfg());
  json b = witness::build_witness(p4_c2_spec(), small_cfg());
  CHECK(witness::certificate_text(a) == witness::certificate_text(b));
  CHECK(a["fingerprint"] == io::spec_fingerprint(p4_c2_spec()));
}

TEST_CASE("verification accepts fresh certificates") {
  RunConfig cfg = small_cfg();
  json cert = witness::build_witness(p4_c2_spec(), cfg);
  witness::VerifyResult res = witness::verify_certificate(
      cert, p4_c2_spec(), cfg, witness::certificate_text(cert));
  CHECK(res.ok);
  CHECK(res.discrepancies.empty());
  // rejected certificates verify too
  json red = witness::build_witness(square_spec(), cfg);
  CHECK(witness::verify_certificate(red, square_spec(), cfg,
                                    witness::certificate_text(red))
            .ok);
}

TEST_CASE("verification catches tampering") {
  RunConfig cfg = small_cfg();
  json cert = witness::build_witness(p4_c2_spec(), cfg);

  json bad = cert;
  bad["witness"]["word"] = "1 4 3 3";
  witness::VerifyResult r1 =
      witness::verify_certificate(bad, p4_c2_spec(), cfg);
  CHECK(!r1.ok);
  bool named = false;
  for (const auto& d : r1.discrepancies)
    named = named || d.find("straightness") != std::string::npos;
  CHECK(named);

  json badlift = cert;
  badlift["witness"]["lift"] = "a:1 c:1 d:1 c:1";
  CHECK(!witness::verify_certificate(badlift, p4_c2_spec(), cfg).ok);

  json badev = cert;
  badev["evidence"]["hull"]["size"] =
      badev["evidence"]["hull"]["size"].get<long>() + 1;
  witness::VerifyResult r3 =
      witness::verify_certificate(badev, p4_c2_spec(), cfg);
  CHECK(!r3.ok);
  named = false;
  for (const auto& d : r3.discrepancies)
    named = named || d.find("evidence.hull") != std::string::npos;
  CHECK(named);

  // verdict flip
  json flip = witness::build_witness(square_spec(), cfg);
  flip["verdict"] = "AcylindricallyHyperbolic";
  CHECK(!witness::verify_certificate(flip, square_spec(), cfg).ok);
}

TEST_CASE("verification enforces the parameter contract") {
  RunConfig cfg = small_cfg();
  json cert = witness::build_witness(p4_c2_spec(), cfg);
  RunConfig shallow = cfg;
  shallow.root_depth = 4;
  witness::VerifyResult res =
      witness::verify_certificate(cert, p4_c2_spec(), shallow);
  CHECK(!res.ok);
  REQUIRE(!res.discrepancies.empty());
  CHECK(res.discrepancies[0].find("ParameterMismatch") != std::string::npos);
  CHECK(res.discrepancies[0].find("root_depth") != std::string::npos);
  // an explicit k_power expectation is checked, the auto default is not
  RunConfig k = cfg;
  k.k_power = 4;
  witness::VerifyResult kres = witness::verify_certificate(cert, p4_c2_spec(), k);
  CHECK(!kres.ok);
}

TEST_CASE("verification gates on fingerprint and shape") {
  RunConfig cfg = small_cfg();
  json cert = witness::build_witness(p4_c2_spec(), cfg);
  CHECK_THROWS_AS(
      (void)witness::verify_certificate(cert, two_free_spec(), cfg),
      FingerprintMismatch);
  json noparams = cert;
  noparams.erase("parameters");
  CHECK_THROWS_AS(
      (void)witness::verify_certificate(noparams, p4_c2_spec(), cfg),
      InvalidDocument);
}

TEST_CASE("byte level canonical form is enforced") {
  RunConfig cfg = small_cfg();
  json cert = witness::build_witness(p4_c2_spec(), cfg);
  std::string pretty = cert.dump(2) + "\n";  // same tree, different bytes
  witness::VerifyResult res =
      witness::verify_certificate(cert, p4_c2_spec(), cfg, pretty);
  CHECK(!res.ok);
  REQUIRE(res.discrepancies.size() == 1);
  CHECK(res.discrepancies[0].find("canonical serialization") !=
        std::string::npos);
}
