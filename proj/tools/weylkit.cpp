#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/gprod.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/weyl.hpp"
#include "weylkit/witness.hpp"

namespace {

using nlohmann::json;
using namespace weylkit;

json roots_artifact(const weyl::CoxeterSystem& sys, int depth, long cap) {
  json out;
  out["depth"] = depth;
  json arr = json::array();
  for (const weyl::Root& r : weyl::enumerate_roots(sys, depth, cap)) {
    json e;
    e["x"] = std::vector<long long>(r.x.data(), r.x.data() + r.x.size());
    e["y"] = std::vector<long long>(r.y.data(), r.y.data() + r.y.size());
    e["layer"] = r.layer;
    arr.push_back(std::move(e));
  }
  out["count"] = arr.size();
  out["roots"] = std::move(arr);
  return out;
}

json words_artifact(const gprod::GraphProductSpec& spec,
                    const std::vector<gprod::Word>& words) {
  json arr = json::array();
  for (const gprod::Word& w : words) arr.push_back(gprod::word_str(spec, w));
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Coxeter group, graph product and building computations"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  app.add_option("--config", config_path, "RunConfig JSON file");
  app.add_option("--out", out_path, "also write the artifact to this file");

  std::string in_a, in_b, word_arg, h_arg, x_arg;
  std::vector<std::string> seeds;
  int depth = -1, n_flag = -1, d_flag = 2, hull_window = -1, wall_depth = -1,
      root_depth = -1;
  long m_flag = 1, radius = -1, k_power = -1;
  bool certify = false;

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify a generalized Cartan matrix");
  c_classify->add_option("matrix", in_a, "matrix JSON file")->required();

  CLI::App* c_roots =
      app.add_subcommand("roots", "enumerate positive real roots");
  c_roots->add_option("system", in_a, "system JSON file")->required();
  c_roots->add_option("--depth", depth, "closure depth");

  CLI::App* c_length =
      app.add_subcommand("length", "length and reduced word of an element");
  c_length->add_option("system", in_a, "system JSON file")->required();
  c_length->add_option("--word", word_arg, "1-based generator word")
      ->required();

  CLI::App* c_straight =
      app.add_subcommand("straight", "test straightness up to a power");
  c_straight->add_option("system", in_a, "system JSON file")->required();
  c_straight->add_option("--word", word_arg, "1-based generator word")
      ->required();
  c_straight->add_option("--n", n_flag, "largest power checked");
  c_straight->add_flag("--certify", certify,
                       "emit the full straightness certificate");
  c_straight->add_option("--k-power", k_power, "regularity power bound");
  c_straight->add_option("--root-depth", root_depth, "root closure depth");

  CLI::App* c_gpn =
      app.add_subcommand("gp-normal", "normal form in a graph product");
  c_gpn->add_option("spec", in_a, "graph product JSON file")->required();
  c_gpn->add_option("--word", word_arg, "syllables like \"u:1 v:2\"")
      ->required();

  CLI::App* c_gpb = app.add_subcommand("gp-ball", "chamber ball");
  c_gpb->add_option("spec", in_a, "graph product JSON file")->required();
  c_gpb->add_option("--radius", radius, "gallery radius")->required();

  CLI::App* c_gph = app.add_subcommand("gp-hull", "combinatorial hull");
  c_gph->add_option("spec", in_a, "graph product JSON file")->required();
  c_gph->add_option("--seed", seeds, "seed chamber (repeatable)")->required();

  CLI::App* c_gpw =
      app.add_subcommand("gp-wpd", "brute force WPD point enumeration");
  // frees the short -h so the acting element can be spelled --h
  c_gpw->set_help_flag("--help", "print help");
  c_gpw->add_option("spec", in_a, "graph product JSON file")->required();
  c_gpw->add_option("--h", h_arg, "acting element")->required();
  c_gpw->add_option("--x", x_arg, "base chamber (default identity)");
  c_gpw->add_option("--d", d_flag, "separation bound");
  c_gpw->add_option("--m", m_flag, "power of h");
  c_gpw->add_option("--radius", radius,
                    "search radius, negative = completeness bound");

  CLI::App* c_wit =
      app.add_subcommand("witness", "build an acylindricity certificate");
  c_wit->add_option("spec", in_a, "graph product JSON file")->required();
  c_wit->add_option("--n-straight", n_flag, "straightness window");
  c_wit->add_option("--k-power", k_power, "regularity power bound");
  c_wit->add_option("--root-depth", root_depth, "root closure depth");
  c_wit->add_option("--hull-window", hull_window, "hull window N");
  c_wit->add_option("--wall-depth", wall_depth, "separated wall search depth");

  CLI::App* c_ver =
      app.add_subcommand("verify", "re-verify a certificate against a spec");
  c_ver->add_option("certificate", in_a, "certificate JSON file")->required();
  c_ver->add_option("spec", in_b, "graph product JSON file")->required();
  c_ver->add_option("--n-straight", n_flag, "expected straightness window");
  c_ver->add_option("--k-power", k_power, "expected regularity power bound");
  c_ver->add_option("--root-depth", root_depth, "expected root depth");
  c_ver->add_option("--hull-window", hull_window, "expected hull window");
  c_ver->add_option("--wall-depth", wall_depth, "expected wall depth");

  for (CLI::App* sc : app.get_subcommands({})) (void)sc;
  for (CLI::App* sc :
       {c_classify, c_roots, c_length, c_straight, c_gpn, c_gpb, c_gph, c_gpw,
        c_wit, c_ver})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"]["code"] = "UsageError";
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  int exit_code = 0;
  try {
    RunConfig cfg;
    if (!config_path.empty())
      cfg = io::config_from_json(io::load_json_file(config_path));
    if (n_flag > 0) cfg.n_straight = n_flag;
    if (k_power >= 0) cfg.k_power = k_power;
    if (root_depth >= 0) cfg.root_depth = root_depth;
    if (hull_window > 0) cfg.hull_window = hull_window;
    if (wall_depth >= 0) cfg.wall_depth = wall_depth;

    json artifact;
    if (app.got_subcommand(c_classify)) {
      artifact = io::classify_artifact(io::load_json_file(in_a));
    } else if (app.got_subcommand(c_roots)) {
      weyl::CoxeterSystem sys = io::system_from_json(io::load_json_file(in_a));
      int d = depth >= 0 ? depth : cfg.root_depth;
      artifact = roots_artifact(sys, d, cfg.root_cap);
    } else if (app.got_subcommand(c_length)) {
      weyl::CoxeterSystem sys = io::system_from_json(io::load_json_file(in_a));
      std::vector<int> word = io::parse_weyl_word(word_arg, sys.n);
      weyl::LengthWord lw =
          weyl::length_and_reduced_word(sys, weyl::element_of_word(sys, word));
      artifact["length"] = lw.length;
      artifact["reduced_word"] = io::weyl_word_str(lw.word);
    } else if (app.got_subcommand(c_straight)) {
      weyl::CoxeterSystem sys = io::system_from_json(io::load_json_file(in_a));
      std::vector<int> word = io::parse_weyl_word(word_arg, sys.n);
      weyl::WeylElement w = weyl::element_of_word(sys, word);
      int n = n_flag > 0 ? n_flag : cfg.n_straight;
      std::vector<long> ls = weyl::power_lengths(sys, w, n);
      artifact["n"] = n;
      artifact["power_lengths"] = ls;
      artifact["straight_up_to"] = weyl::is_straight_up_to(sys, w, n);
      if (certify) {
        long k = cfg.k_power > 0 ? cfg.k_power
                                 : 2 * std::max<long>(1, ls.empty() ? 1 : ls[0]);
        artifact["certificate"] = witness::straightness_record(
            weyl::certify_straight(sys, w, n, k, cfg.root_depth, cfg.root_cap,
                                   cfg.conj_budget));
      }
    } else if (app.got_subcommand(c_gpn)) {
      gprod::GraphProductSpec spec =
          io::gp_spec_from_json(io::load_json_file(in_a));
      gprod::Word w = gprod::parse_word(spec, word_arg);
      artifact["normal_form"] = gprod::word_str(spec, w);
      artifact["syllables"] = w.size();
      artifact["weyl_word"] =
          io::weyl_word_str(gprod::weyl_distance(spec, gprod::Word{}, w));
    } else if (app.got_subcommand(c_gpb)) {
      gprod::GraphProductSpec spec =
          io::gp_spec_from_json(io::load_json_file(in_a));
      if (radius < 0) throw UsageError("radius must be nonnegative");
      std::vector<gprod::Word> b =
          gprod::ball(spec, static_cast<int>(radius), cfg.ball_cap);
      artifact["radius"] = radius;
      artifact["count"] = b.size();
      artifact["chambers"] = words_artifact(spec, b);
    } else if (app.got_subcommand(c_gph)) {
      gprod::GraphProductSpec spec =
          io::gp_spec_from_json(io::load_json_file(in_a));
      std::vector<gprod::Word> ws;
      for (const std::string& s : seeds)
        ws.push_back(gprod::parse_word(spec, s));
      gprod::HullResult hull =
          gprod::combinatorial_hull(spec, ws, cfg.ball_cap);
      artifact["seeds"] = words_artifact(spec, ws);
      artifact["size"] = hull.chambers.size();
      artifact["rounds"] = hull.rounds;
      artifact["chambers"] = words_artifact(spec, hull.chambers);
    } else if (app.got_subcommand(c_gpw)) {
      gprod::GraphProductSpec spec =
          io::gp_spec_from_json(io::load_json_file(in_a));
      gprod::Word h = gprod::parse_word(spec, h_arg);
      gprod::Word x = gprod::parse_word(spec, x_arg);
      gprod::WpdResult r = gprod::brute_force_wpd_check(
          spec, h, x, d_flag, m_flag, radius, cfg.ball_cap);
      artifact["d"] = d_flag;
      artifact["m"] = m_flag;
      artifact["h"] = gprod::word_str(spec, h);
      artifact["x"] = gprod::word_str(spec, x);
      artifact["radius"] = radius < 0 ? r.radius_bound : radius;
      artifact["radius_bound"] = r.radius_bound;
      artifact["complete"] = r.complete;
      artifact["degenerate"] = r.degenerate;
      artifact["p_size"] = r.p.size();
      artifact["p"] = words_artifact(spec, r.p);
    } else if (app.got_subcommand(c_wit)) {
      artifact = witness::build_witness(io::load_json_file(in_a), cfg);
    } else if (app.got_subcommand(c_ver)) {
      std::string raw = io::read_text_file(in_a);
      json cert;
      try {
        cert = json::parse(raw);
      } catch (const json::parse_error& e) {
        throw InvalidDocument(std::string("certificate is not valid JSON: ") +
                              e.what());
      }
      witness::VerifyResult res = witness::verify_certificate(
          cert, io::load_json_file(in_b), cfg, raw);
      artifact["ok"] = res.ok;
      artifact["discrepancies"] = res.discrepancies;
      if (!res.ok) exit_code = 1;
    }

    std::string text = io::canonical_dump(artifact) + "\n";
    std::fwrite(text.data(), 1, text.size(), stdout);
    if (!out_path.empty()) io::write_text_file(out_path, text);
  } catch (const UsageError& e) {
    json err;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    json err;
    err["error"]["code"] = e.code();
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err;
    err["error"]["code"] = "Internal";
    err["error"]["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return exit_code;
}
