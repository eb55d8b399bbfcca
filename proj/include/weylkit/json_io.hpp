#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "weylkit/config.hpp"
#include "weylkit/gprod.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit::io {

using nlohmann::json;

json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Canonical bytes: compact dump with sorted keys. Fingerprints and the
// byte-exactness contract both hang off this.
std::string canonical_dump(const json& j);
std::string spec_fingerprint(const json& spec);

Eigen::MatrixXi parse_int_matrix(const json& j, const char* what);

// {"gcm": [[...]]} or {"coxeter_matrix": [[...]]}
weyl::CoxeterSystem system_from_json(const json& j);

gprod::GraphProductSpec gp_spec_from_json(const json& j);

// Classification artifact for a GCM document, reducible matrices reported
// per block.
json classify_artifact(const json& doc);

// Words cross the JSON boundary as whitespace-separated 1-based indices.
std::vector<int> parse_weyl_word(const std::string& text, int n);
std::string weyl_word_str(const std::vector<int>& word);

RunConfig config_from_json(const json& j);
json config_to_json(const RunConfig& c);

}  // namespace weylkit::io
