#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "weylkit/config.hpp"
#include "weylkit/gprod.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit::witness {

using nlohmann::json;

struct HypothesisReport {
  bool irreducible = false;
  bool two_vertex_case = false;
  bool free_transitive = true;  // graph products act freely transitively
  std::string type;  // spherical | affine | indefinite | reducible
  Eigen::MatrixXi wgamma_gcm;
  json record;
};

// Coxeter data of the right-angled group W_Gamma: 2 on the diagonal, 0 on
// edges (commuting pairs), -2 on non-edges (infinite bonds).
Eigen::MatrixXi coxeter_gcm_of_graph(const gprod::GraphProductSpec& spec);

// Evidence-record serializations shared by the pipeline, the verifier and
// the CLI.
json straightness_record(const weyl::StraightnessCertificate& c);
json regularity_record(const weyl::RegularityCertificate& c);

HypothesisReport check_hypotheses(const gprod::GraphProductSpec& spec);

// Full certificate pipeline. Deterministic: identical spec bytes and
// parameters give identical certificates; sampling is seeded from the spec
// fingerprint.
json build_witness(const json& spec_json, const RunConfig& cfg);

// Certificate file bytes are the canonical dump plus one newline.
std::string certificate_text(const json& cert);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> discrepancies;
};

// Fingerprint gate, parameter contract against expected, full deterministic
// rebuild, per-record recomputation from the certificate's own witness, and
// byte-exact comparison when raw bytes are supplied.
VerifyResult verify_certificate(const json& cert, const json& spec_json,
                                const RunConfig& expected,
                                const std::string& raw_bytes = std::string());

}  // namespace weylkit::witness
