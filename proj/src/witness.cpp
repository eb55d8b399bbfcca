#include "weylkit/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "weylkit/errors.hpp"
#include "weylkit/gcm.hpp"
#include "weylkit/json_io.hpp"

namespace weylkit::witness {

namespace {

json straight_json(const weyl::StraightnessCertificate& c) {
  json j;
  j["verdict"] = weyl::straight_verdict_name(c.verdict);
  j["n_checked"] = c.n_checked;
  j["base_length"] = c.base_length;
  j["power_lengths"] = c.lengths;
  if (c.min_conj) {
    json m;
    m["word"] = io::weyl_word_str(c.min_conj->word);
    m["length"] = c.min_conj->length;
    m["explored"] = c.min_conj->explored;
    j["min_conj"] = std::move(m);
  }
  if (c.regularity)
    j["regularity_verdict"] = weyl::reg_verdict_name(c.regularity->verdict);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json reg_json(const weyl::RegularityCertificate& c) {
  json j;
  j["verdict"] = weyl::reg_verdict_name(c.verdict);
  j["k_bound"] = c.k_bound;
  j["root_depth"] = c.root_depth;
  j["root_count"] = c.root_count;
  j["torsion_branch"] = c.torsion_branch;
  if (c.torsion_order) j["torsion_order"] = *c.torsion_order;
  if (c.coxeter_word) j["coxeter_word"] = io::weyl_word_str(*c.coxeter_word);
  json fs = json::array();
  for (const weyl::FixedSpaceRecord& r : c.fixed_space) {
    json e;
    e["k"] = r.k;
    e["fixed_dim"] = r.fixed_dim;
    e["orbit_hits"] = r.orbit_hits;
    e["kernel_hits"] = r.kernel_hits;
    fs.push_back(std::move(e));
  }
  j["fixed_space"] = std::move(fs);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json coords_json(const weyl::Root& r) {
  json j;
  std::vector<long long> x(r.x.data(), r.x.data() + r.x.size());
  std::vector<long long> y(r.y.data(), r.y.data() + r.y.size());
  j["x"] = x;
  j["y"] = y;
  return j;
}

// (d, m) sample pairs read off the fingerprint bytes, padded from a fixed
// grid when the hash happens to repeat itself.
std::vector<std::pair<int, long>> wpd_samples(const std::string& fp) {
  auto hexval = [](char c) {
    return c <= '9' ? c - '0' : c - 'a' + 10;
  };
  std::vector<int> bytes;
  for (std::size_t i = 0; i + 1 < fp.size(); i += 2)
    bytes.push_back(hexval(fp[i]) * 16 + hexval(fp[i + 1]));
  std::vector<std::pair<int, long>> out;
  std::set<std::pair<int, long>> used;
  for (std::size_t i = 0; i + 1 < bytes.size() && out.size() < 3; i += 2) {
    std::pair<int, long> s{2 + bytes[i] % 2, 1 + bytes[i + 1] % 3};
    if (used.insert(s).second) out.push_back(s);
  }
  for (int d = 2; d <= 3; ++d)
    for (long m = 1; m <= 3 && out.size() < 3; ++m) {
      std::pair<int, long> s{d, m};
      if (used.insert(s).second) out.push_back(s);
    }
  return out;
}

json wpd_json(const gprod::GraphProductSpec& spec, const gprod::Word& h,
              const std::string& fp, long cap) {
  json samples = json::array();
  for (const auto& [d, m] : wpd_samples(fp)) {
    gprod::WpdResult r =
        gprod::brute_force_wpd_check(spec, h, gprod::Word{}, d, m, d - 1, cap);
    json e;
    e["d"] = d;
    e["m"] = m;
    e["x"] = "";
    e["radius"] = d - 1;
    e["radius_bound"] = r.radius_bound;
    e["complete"] = r.complete;
    e["degenerate"] = r.degenerate;
    e["p_size"] = r.p.size();
    samples.push_back(std::move(e));
  }
  gprod::WpdResult sane =
      gprod::brute_force_wpd_check(spec, h, gprod::Word{}, 1, 1, 0, cap);
  json sanity;
  sanity["d"] = 1;
  sanity["m"] = 1;
  sanity["p_size"] = sane.p.size();
  sanity["identity_only"] = sane.p.size() == 1 && sane.p[0].empty();
  json j;
  j["samples"] = std::move(samples);
  j["sanity"] = std::move(sanity);
  return j;
}

json hull_json(const gprod::GraphProductSpec& spec, const gprod::Word& h,
               int window, long cap) {
  gprod::Word hn = gprod::gp_pow(spec, h, window);
  gprod::HullResult hull =
      gprod::combinatorial_hull(spec, {gprod::Word{}, hn}, cap);
  auto contains = [&](const gprod::Word& c) {
    return std::binary_search(hull.chambers.begin(), hull.chambers.end(), c,
                              gprod::word_less);
  };
  bool axis = true;
  gprod::Word hk;
  for (int k = 0; k <= window && axis; ++k) {
    axis = contains(hk);
    hk = gprod::gp_mul(spec, hk, h);
  }
  json j;
  j["window"] = window;
  j["size"] = hull.chambers.size();
  j["rounds"] = hull.rounds;
  j["base_in_hull"] = contains(gprod::Word{});
  j["axis_in_hull"] = axis;
  return j;
}

json separated_walls_json(const weyl::CoxeterSystem& wsys, int depth,
                          long cap) {
  json j;
  j["depth"] = depth;
  j["contraction_basis"] =
      "axes of Coxeter elements are strongly contracting; the wall pair "
      "below corroborates the divergence of half-spaces";
  try {
    auto pr = weyl::find_separated_wall_pair(wsys, depth, cap);
    if (pr) {
      j["found"] = true;
      j["alpha"] = coords_json(pr->first);
      j["beta"] = coords_json(pr->second);
    } else {
      j["found"] = false;
    }
  } catch (const SearchBudgetExceeded&) {
    j["found"] = false;
    j["note"] = "root budget exhausted";
  }
  return j;
}

json base_params(const RunConfig& cfg) {
  json p = io::config_to_json(cfg);
  return p;
}

long long w0_power(const gprod::GraphProductSpec& spec, const W0Data& d,
                   const std::vector<int>& word) {
  for (const auto& [name, img] : d.images) {
    bool known = false;
    for (const std::string& s : spec.names) known = known || s == name;
    if (!known)
      throw HypothesesFailed("w0 image names unknown vertex '" + name + "'");
  }
  std::vector<long long> t(d.moduli.size(), 0);
  for (int v : word) {
    auto it = d.images.find(spec.names[v]);
    if (it == d.images.end())
      throw HypothesesFailed("w0 images missing vertex '" + spec.names[v] +
                             "'");
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = (t[i] + it->second[i]) % d.moduli[i];
  }
  long long p = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    long long ord = d.moduli[i] / std::gcd(d.moduli[i], t[i]);
    long long g = std::gcd(p, ord);
    long long np = 0;
    if (__builtin_mul_overflow(p / g, ord, &np))
      throw ArithmeticOverflow("w0 power does not fit 64 bits");
    p = np;
  }
  return p;
}

}  // namespace

json straightness_record(const weyl::StraightnessCertificate& c) {
  return straight_json(c);
}

json regularity_record(const weyl::RegularityCertificate& c) {
  return reg_json(c);
}

Eigen::MatrixXi coxeter_gcm_of_graph(const gprod::GraphProductSpec& spec) {
  const int n = spec.n();
  Eigen::MatrixXi a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = i == j ? 2 : (spec.adj[i][j] ? 0 : -2);
  return a;
}

HypothesisReport check_hypotheses(const gprod::GraphProductSpec& spec) {
  HypothesisReport r;
  r.wgamma_gcm = coxeter_gcm_of_graph(spec);
  r.two_vertex_case = spec.n() == 2 && !spec.adj[0][1];
  r.irreducible = gprod::is_irreducible_graph(spec);
  gcm::GeneralizedCartanMatrix g = gcm::validate_gcm(r.wgamma_gcm);
  json blocks = json::array();
  bool all_spherical = true;
  for (const std::vector<int>& comp : gcm::components(g)) {
    gcm::MatrixType ty = gcm::classify_type(gcm::submatrix(g, comp));
    all_spherical = all_spherical && ty == gcm::MatrixType::Spherical;
    json b;
    json names = json::array();
    for (int v : comp) names.push_back(spec.names[v]);
    b["vertices"] = std::move(names);
    b["type"] = gcm::type_name(ty);
    blocks.push_back(std::move(b));
  }
  if (all_spherical)
    r.type = "spherical";
  else if (!r.irreducible)
    r.type = "reducible";
  else
    r.type = gcm::type_name(gcm::classify_type(g));
  r.record["irreducible"] = r.irreducible;
  r.record["two_vertex_case"] = r.two_vertex_case;
  r.record["free_transitive"] = true;
  r.record["type"] = r.type;
  r.record["blocks"] = std::move(blocks);
  return r;
}

json build_witness(const json& spec_json, const RunConfig& cfg) {
  gprod::GraphProductSpec spec = io::gp_spec_from_json(spec_json);
  std::string fp = io::spec_fingerprint(spec_json);
  HypothesisReport hyp = check_hypotheses(spec);

  json cert;
  cert["version"] = "1";
  cert["fingerprint"] = fp;
  json ev;
  // declared in every certificate: distances are gallery distances on the
  // chamber graph, quasi-isometric to the CAT(0) realization
  ev["metric"] = "gallery";
  ev["hypotheses"] = hyp.record;
  json params = base_params(cfg);

  auto finish = [&](const std::string& verdict, json witness) {
    cert["verdict"] = verdict;
    cert["witness"] = std::move(witness);
    cert["evidence"] = std::move(ev);
    cert["parameters"] = std::move(params);
    return cert;
  };
  auto reject = [&](const std::string& reason, json extra) {
    extra["reason"] = reason;
    ev["rejection"] = std::move(extra);
    return finish("Rejected(" + reason + ")", nullptr);
  };

  if (hyp.two_vertex_case) {
    json fp_note;
    fp_note["factors"] = std::vector<std::string>{spec.names[0], spec.names[1]};
    fp_note["note"] =
        "two vertex factors with no edge: the action on the Bass-Serre tree "
        "of the free product is acylindrical";
    ev["free_product"] = std::move(fp_note);
    return finish("FreeProductCase", nullptr);
  }
  if (hyp.type == "spherical") {
    json extra;
    if (spec.n() <= 22) {
      gprod::GraphProductSpec shadow = spec;
      for (int v = 0; v < spec.n(); ++v) {
        shadow.groups[v] = gprod::VertexGroup{2, {}};
        shadow.distinguished[v] = 1;
      }
      extra["group_order"] =
          gprod::ball(shadow, spec.n() + 2, cfg.ball_cap).size();
      extra["oracle"] = "full bfs of the right-angled group closed";
    } else {
      extra["oracle"] = "bfs skipped above rank 22";
    }
    return reject("Spherical", std::move(extra));
  }
  if (!hyp.irreducible) {
    json extra;
    extra["components"] = hyp.record["blocks"];
    return reject("Reducible", std::move(extra));
  }
  if (hyp.type == "affine") return reject("Affine", json::object());

  // indefinite irreducible: construct the witness per the main pipeline
  weyl::CoxeterSystem wsys = weyl::CoxeterSystem::from_gcm(hyp.wgamma_gcm);
  std::vector<int> w0word(wsys.n);
  for (int i = 0; i < wsys.n; ++i) w0word[i] = i;
  long long pw = 1;
  if (cfg.w0) pw = w0_power(spec, *cfg.w0, w0word);
  weyl::WeylElement w0 = weyl::element_of_word(wsys, w0word);
  weyl::WeylElement wp = weyl::power(wsys, w0, pw);
  weyl::MinConj mc = weyl::min_length_conjugate(wsys, wp, cfg.conj_budget);

  json constr;
  constr["coxeter_word"] = io::weyl_word_str(w0word);
  constr["power"] = pw;
  constr["min_conj_length"] = mc.length;
  constr["min_conj_explored"] = mc.explored;
  ev["witness_construction"] = std::move(constr);

  long k = cfg.k_power > 0 ? cfg.k_power : 2 * std::max<long>(1, mc.length);
  params["k_power"] = k;
  weyl::StraightnessCertificate scert =
      weyl::certify_straight(wsys, mc.elt, cfg.n_straight, k, cfg.root_depth,
                             cfg.root_cap, cfg.conj_budget);
  weyl::RegularityCertificate reg =
      scert.regularity ? *scert.regularity
                       : weyl::certify_regular(wsys, mc.elt, k, cfg.root_depth,
                                               cfg.root_cap, cfg.conj_budget);
  ev["straightness"] = straight_json(scert);
  ev["regularity"] = reg_json(reg);

  gprod::Word h = gprod::apartment_section(spec, mc.word);
  json wit;
  wit["word"] = io::weyl_word_str(mc.word);
  wit["lift"] = gprod::word_str(spec, h);
  wit["base"] = "";

  ev["hull"] = hull_json(spec, h, cfg.hull_window, cfg.ball_cap);
  ev["wpd"] = wpd_json(spec, h, fp, cfg.ball_cap);
  ev["separated_walls"] =
      separated_walls_json(wsys, cfg.wall_depth, cfg.root_cap);

  bool straight_ok = scert.verdict == weyl::StraightVerdict::CertifiedStraight;
  bool reg_ok = reg.verdict == weyl::RegVerdict::CertifiedCoxeterElement ||
                reg.verdict == weyl::RegVerdict::CertifiedByFixedSpaceSearch;
  bool hull_ok = ev["hull"]["base_in_hull"].get<bool>() &&
                 ev["hull"]["axis_in_hull"].get<bool>();
  bool wpd_ok = ev["wpd"]["sanity"]["identity_only"].get<bool>();
  for (const json& s : ev["wpd"]["samples"])
    wpd_ok = wpd_ok && s["complete"].get<bool>();

  std::string fail;
  if (!straight_ok)
    fail = "StraightnessNotCertified";
  else if (!reg_ok)
    fail = "RegularityNotCertified";
  else if (!hull_ok)
    fail = "HullMembershipFailed";
  else if (!wpd_ok)
    fail = "WpdSamplingFailed";
  if (!fail.empty()) {
    json extra;
    extra["reason"] = fail;
    ev["rejection"] = std::move(extra);
    return finish("Rejected(" + fail + ")", std::move(wit));
  }
  return finish("AcylindricallyHyperbolic", std::move(wit));
}

std::string certificate_text(const json& cert) {
  return io::canonical_dump(cert) + "\n";
}

VerifyResult verify_certificate(const json& cert, const json& spec_json,
                                const RunConfig& expected,
                                const std::string& raw_bytes) {
  if (!cert.is_object() || !cert.contains("fingerprint") ||
      !cert["fingerprint"].is_string())
    throw InvalidDocument("certificate lacks a fingerprint");
  if (cert["fingerprint"].get<std::string>() !=
      io::spec_fingerprint(spec_json))
    throw FingerprintMismatch(
        "certificate fingerprint does not match this spec");
  if (!cert.contains("parameters") || !cert["parameters"].is_object())
    throw InvalidDocument("certificate lacks a parameters block");

  VerifyResult res;
  const json& p = cert["parameters"];
  json expj = io::config_to_json(expected);
  for (const char* key :
       {"n_straight", "root_depth", "hull_window", "wall_depth", "root_cap",
        "conj_budget", "ball_cap", "w0"}) {
    json have = p.contains(key) ? p[key] : json();
    if (have != expj[key])
      res.discrepancies.push_back(std::string("ParameterMismatch: ") + key +
                                  " expected " + expj[key].dump() +
                                  ", certificate has " + have.dump());
  }
  if (expected.k_power > 0) {
    json have = p.contains("k_power") ? p["k_power"] : json();
    if (have != json(expected.k_power))
      res.discrepancies.push_back(
          "ParameterMismatch: k_power expected " + expj["k_power"].dump() +
          ", certificate has " + have.dump());
  }

  json rebuilt;
  bool have_rebuild = false;
  try {
    RunConfig rcfg = io::config_from_json(p);
    rebuilt = build_witness(spec_json, rcfg);
    have_rebuild = true;
  } catch (const Error& e) {
    res.discrepancies.push_back(
        std::string("rebuild with the recorded parameters failed: ") +
        e.what());
  }
  if (have_rebuild) {
    for (const char* key : {"version", "verdict", "witness", "parameters"}) {
      json a = cert.contains(key) ? cert[key] : json();
      json b = rebuilt[key];
      if (a != b)
        res.discrepancies.push_back(std::string(key) +
                                    " differs from the rebuild");
    }
    json ca = cert.contains("evidence") ? cert["evidence"] : json::object();
    const json& cb = rebuilt["evidence"];
    std::set<std::string> keys;
    if (ca.is_object())
      for (auto it = ca.begin(); it != ca.end(); ++it) keys.insert(it.key());
    for (auto it = cb.begin(); it != cb.end(); ++it) keys.insert(it.key());
    for (const std::string& key : keys) {
      json a = ca.is_object() && ca.contains(key) ? ca[key] : json();
      json b = cb.contains(key) ? cb[key] : json();
      if (a != b)
        res.discrepancies.push_back("evidence." + key +
                                    " differs from the rebuild");
    }
  }

  // Re-derive the analytic records from the certificate's own witness, so a
  // tampered word is pinned to the records it breaks.
  if (cert.contains("witness") && cert["witness"].is_object() &&
      cert["witness"].contains("word")) {
    gprod::GraphProductSpec spec = io::gp_spec_from_json(spec_json);
    try {
      weyl::CoxeterSystem wsys =
          weyl::CoxeterSystem::from_gcm(coxeter_gcm_of_graph(spec));
      std::vector<int> word = io::parse_weyl_word(
          cert["witness"]["word"].get<std::string>(), wsys.n);
      weyl::WeylElement w = weyl::element_of_word(wsys, word);
      RunConfig rcfg = io::config_from_json(p);
      long k = rcfg.k_power > 0 ? rcfg.k_power
                                : 2 * std::max<long>(1, weyl::length_of(wsys, w));
      weyl::StraightnessCertificate scert = weyl::certify_straight(
          wsys, w, rcfg.n_straight, k, rcfg.root_depth, rcfg.root_cap,
          rcfg.conj_budget);
      const json& ev =
          cert.contains("evidence") ? cert["evidence"] : json::object();
      if (!ev.contains("straightness") ||
          ev["straightness"] != straight_json(scert))
        res.discrepancies.push_back(
            "straightness record does not re-verify from the certificate's "
            "witness word");
      weyl::RegularityCertificate reg =
          scert.regularity
              ? *scert.regularity
              : weyl::certify_regular(wsys, w, k, rcfg.root_depth,
                                      rcfg.root_cap, rcfg.conj_budget);
      if (!ev.contains("regularity") || ev["regularity"] != reg_json(reg))
        res.discrepancies.push_back(
            "regularity record does not re-verify from the certificate's "
            "witness word");
      gprod::Word h =
          gprod::parse_word(spec, cert["witness"]["lift"].get<std::string>());
      if (!ev.contains("hull") ||
          ev["hull"] != hull_json(spec, h, rcfg.hull_window, rcfg.ball_cap))
        res.discrepancies.push_back(
            "hull record does not re-verify from the certificate's witness "
            "lift");
      if (!ev.contains("wpd") ||
          ev["wpd"] != wpd_json(spec, h,
                                cert["fingerprint"].get<std::string>(),
                                rcfg.ball_cap))
        res.discrepancies.push_back(
            "wpd records do not re-verify from the certificate's witness "
            "lift");
    } catch (const Error& e) {
      res.discrepancies.push_back(
          std::string(
              "straightness record cannot be recomputed from the witness: ") +
          e.what());
    }
  }

  if (have_rebuild && !raw_bytes.empty() && res.discrepancies.empty() &&
      raw_bytes != certificate_text(rebuilt))
    res.discrepancies.push_back(
        "certificate bytes differ from the canonical serialization");

  res.ok = res.discrepancies.empty();
  return res;
}

}  // namespace weylkit::witness
