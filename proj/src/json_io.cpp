#include "weylkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "weylkit/errors.hpp"
#include "weylkit/gcm.hpp"
#include "weylkit/sha256.hpp"

namespace weylkit::io {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

json load_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidDocument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string canonical_dump(const json& j) { return j.dump(); }

std::string spec_fingerprint(const json& spec) {
  return Sha256::hex(canonical_dump(spec));
}

Eigen::MatrixXi parse_int_matrix(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw InvalidDocument(std::string(what) + " must be a nonempty array");
  const int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const json& row : j) {
    if (!row.is_array() || row.empty())
      throw InvalidDocument(std::string(what) + " rows must be arrays");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (static_cast<int>(row.size()) != cols)
      throw InvalidDocument(std::string(what) + " rows disagree in size");
  }
  Eigen::MatrixXi m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) {
      const json& v = j[i][c];
      if (!v.is_number_integer())
        throw InvalidDocument(std::string(what) + " entries must be integers");
      long long x = v.get<long long>();
      if (x > 1000000000LL || x < -1000000000LL)
        throw InvalidDocument(std::string(what) + " entry out of range");
      m(i, c) = static_cast<int>(x);
    }
  return m;
}

weyl::CoxeterSystem system_from_json(const json& j) {
  if (!j.is_object())
    throw InvalidDocument("system document must be a JSON object");
  bool has_gcm = j.contains("gcm");
  bool has_cox = j.contains("coxeter_matrix");
  if (has_gcm == has_cox)
    throw InvalidDocument(
        "system document needs exactly one of gcm, coxeter_matrix");
  if (has_gcm)
    return weyl::CoxeterSystem::from_gcm(parse_int_matrix(j["gcm"], "gcm"));
  return weyl::CoxeterSystem::from_coxeter_matrix(
      parse_int_matrix(j["coxeter_matrix"], "coxeter_matrix"));
}

namespace {

gprod::VertexGroup group_from_json(const json& j, const std::string& name) {
  if (!j.is_object())
    throw InvalidDocument("group of '" + name + "' must be an object");
  bool cyc = j.contains("cyclic");
  bool tab = j.contains("table");
  if (cyc == tab)
    throw InvalidDocument("group of '" + name +
                          "' needs exactly one of cyclic, table");
  gprod::VertexGroup g;
  if (cyc) {
    const json& k = j["cyclic"];
    if (!k.is_number_integer() || k.get<long long>() < 0)
      throw InvalidDocument("cyclic order of '" + name +
                            "' must be a nonnegative integer");
    g.order = k.get<long long>();
  } else {
    g.table = parse_int_matrix(j["table"], "multiplication table");
    g.order = g.table.rows();
  }
  g.validate();
  return g;
}

}  // namespace

gprod::GraphProductSpec gp_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].empty())
    throw InvalidDocument("graph product spec needs a vertices array");
  gprod::GraphProductSpec spec;
  for (const json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string() ||
        !v.contains("group"))
      throw InvalidDocument("each vertex needs a name and a group");
    spec.names.push_back(v["name"].get<std::string>());
    spec.groups.push_back(group_from_json(v["group"], spec.names.back()));
  }
  const int n = spec.n();
  spec.adj.assign(n, std::vector<char>(n, 0));
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw InvalidDocument("edges must be an array of name pairs");
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
          !e[1].is_string())
        throw InvalidDocument("each edge must be a pair of vertex names");
      int a, b;
      try {
        a = spec.vertex_index(e[0].get<std::string>());
        b = spec.vertex_index(e[1].get<std::string>());
      } catch (const BadSyllable& ex) {
        throw InvalidDocument(std::string("edge references ") + ex.what());
      }
      if (a == b) throw InvalidDocument("edge endpoints must differ");
      if (spec.adj[a][b]) throw InvalidDocument("duplicate edge");
      spec.adj[a][b] = spec.adj[b][a] = 1;
    }
  }
  spec.distinguished.assign(n, 1);
  if (j.contains("distinguished")) {
    if (!j["distinguished"].is_object())
      throw InvalidDocument("distinguished must map vertex names to elements");
    for (auto it = j["distinguished"].begin(); it != j["distinguished"].end();
         ++it) {
      int v;
      try {
        v = spec.vertex_index(it.key());
      } catch (const BadSyllable& ex) {
        throw InvalidDocument(std::string("distinguished references ") +
                              ex.what());
      }
      if (!it.value().is_number_integer())
        throw InvalidDocument("distinguished element of '" + it.key() +
                              "' must be an integer");
      spec.distinguished[v] = it.value().get<long long>();
    }
  }
  spec.validate();
  return spec;
}

json classify_artifact(const json& doc) {
  if (!doc.is_object() || !doc.contains("gcm"))
    throw InvalidDocument("classification expects a {\"gcm\": [[...]]} document");
  gcm::GeneralizedCartanMatrix g =
      gcm::validate_gcm(parse_int_matrix(doc["gcm"], "gcm"));
  json out;
  Eigen::MatrixXi cox = gcm::coxeter_matrix_of(g);
  json cm = json::array();
  for (int i = 0; i < g.n; ++i) {
    json row = json::array();
    for (int c = 0; c < g.n; ++c) row.push_back(cox(i, c));
    cm.push_back(std::move(row));
  }
  out["coxeter_matrix"] = std::move(cm);
  out["crystallographic"] = gcm::is_crystallographic(cox);
  bool indec = gcm::is_indecomposable(g);
  out["indecomposable"] = indec;
  if (indec) {
    out["type"] = gcm::type_name(gcm::classify_type(g));
  } else {
    out["type"] = "reducible";
    json blocks = json::array();
    for (const std::vector<int>& comp : gcm::components(g)) {
      json b;
      json idx = json::array();
      for (int v : comp) idx.push_back(v + 1);
      b["vertices"] = std::move(idx);
      b["type"] = gcm::type_name(gcm::classify_type(gcm::submatrix(g, comp)));
      blocks.push_back(std::move(b));
    }
    out["blocks"] = std::move(blocks);
  }
  return out;
}

std::vector<int> parse_weyl_word(const std::string& text, int n) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trail");
    } catch (const std::exception&) {
      throw InvalidDocument("word token '" + tok + "' is not an integer");
    }
    if (v < 1 || v > n)
      throw BadGenerator("generator index " + std::to_string(v) +
                         " out of range 1.." + std::to_string(n));
    out.push_back(static_cast<int>(v - 1));
  }
  return out;
}

std::string weyl_word_str(const std::vector<int>& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << word[i] + 1;
  }
  return os.str();
}

namespace {

long get_long(const json& j, const char* key, long fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j[key];
  if (!v.is_number_integer())
    throw InvalidDocument(std::string("config field ") + key +
                          " must be an integer");
  return v.get<long>();
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidDocument("config must be a JSON object");
  static const char* known[] = {"n_straight", "k_power",     "root_depth",
                                "hull_window", "wall_depth", "root_cap",
                                "conj_budget", "ball_cap",   "w0"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw InvalidDocument("unknown config field '" + it.key() + "'");
  }
  RunConfig c;
  c.n_straight = static_cast<int>(get_long(j, "n_straight", c.n_straight));
  c.k_power = get_long(j, "k_power", c.k_power);
  c.root_depth = static_cast<int>(get_long(j, "root_depth", c.root_depth));
  c.hull_window = static_cast<int>(get_long(j, "hull_window", c.hull_window));
  c.wall_depth = static_cast<int>(get_long(j, "wall_depth", c.wall_depth));
  c.root_cap = get_long(j, "root_cap", c.root_cap);
  c.conj_budget = get_long(j, "conj_budget", c.conj_budget);
  c.ball_cap = get_long(j, "ball_cap", c.ball_cap);
  if (c.n_straight < 1 || c.root_depth < 0 || c.hull_window < 1 ||
      c.wall_depth < 0 || c.root_cap < 1 || c.conj_budget < 1 ||
      c.ball_cap < 1)
    throw InvalidDocument("config bounds must be positive");
  if (j.contains("w0") && !j["w0"].is_null()) {
    const json& w = j["w0"];
    if (!w.is_object() || !w.contains("moduli") || !w.contains("images"))
      throw InvalidDocument("w0 needs moduli and images");
    W0Data d;
    for (const json& m : w["moduli"]) {
      if (!m.is_number_integer() || m.get<long long>() < 2)
        throw InvalidDocument("w0 moduli must be integers >= 2");
      d.moduli.push_back(m.get<long long>());
    }
    if (d.moduli.empty()) throw InvalidDocument("w0 moduli must be nonempty");
    if (!w["images"].is_object())
      throw InvalidDocument("w0 images must map vertex names to tuples");
    for (auto it = w["images"].begin(); it != w["images"].end(); ++it) {
      std::vector<long long> img;
      if (!it.value().is_array() || it.value().size() != d.moduli.size())
        throw InvalidDocument("w0 image of '" + it.key() +
                              "' must match the moduli in length");
      for (std::size_t i = 0; i < it.value().size(); ++i) {
        const json& e = it.value()[i];
        if (!e.is_number_integer())
          throw InvalidDocument("w0 images must be integers");
        long long v = e.get<long long>() % d.moduli[i];
        if (v < 0) v += d.moduli[i];
        img.push_back(v);
      }
      d.images.emplace(it.key(), std::move(img));
    }
    c.w0 = std::move(d);
  }
  return c;
}

json config_to_json(const RunConfig& c) {
  json j;
  j["n_straight"] = c.n_straight;
  j["k_power"] = c.k_power;
  j["root_depth"] = c.root_depth;
  j["hull_window"] = c.hull_window;
  j["wall_depth"] = c.wall_depth;
  j["root_cap"] = c.root_cap;
  j["conj_budget"] = c.conj_budget;
  j["ball_cap"] = c.ball_cap;
  if (c.w0) {
    json w;
    w["moduli"] = c.w0->moduli;
    json img;
    for (const auto& [name, tuple] : c.w0->images) img[name] = tuple;
    w["images"] = std::move(img);
    j["w0"] = std::move(w);
  } else {
    j["w0"] = nullptr;
  }
  return j;
}

}  // namespace weylkit::io
