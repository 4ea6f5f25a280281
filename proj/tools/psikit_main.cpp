// Command-line front end: evaluate specialization functions on curves and
// normal-crossings models, run the fixture suites, and fuzz the blow-up
// invariance properties.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "psikit/chow.hpp"
#include "psikit/fuzz.hpp"
#include "psikit/model_io.hpp"

using namespace psikit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

json rat_json(const Rat& r) {
  if (r.is_integral()) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    Int n = r.num();
    if (n >= lo && n <= hi) return json(static_cast<long long>(n));
  }
  return json(r.str());
}

json mt_json(const MTClass& m) {
  json arr = json::array();
  for (const auto& p : m.pairs())
    arr.push_back({static_cast<long long>(p[0]), static_cast<long long>(p[1])});
  return arr;
}

json bucket_json(const BucketFunction& b) {
  json o = json::object();
  for (const auto& [p, v] : b) o[p] = rat_json(v);
  return o;
}

json chow_json(const ChowClass& c) {
  json o;
  o["top"] = static_cast<long long>(c.top);
  json div = json::array();
  for (const auto& v : c.div) div.push_back(static_cast<long long>(v));
  o["div"] = div;
  o["pts"] = rat_json(c.pts);
  return o;
}

AlphaFn parse_alpha(const std::string& spec) {
  if (spec.empty() || spec == "identity" || spec == "id") return AlphaFn::identity();
  if (spec == "one") return AlphaFn::constant(1);
  if (spec == "zero") return AlphaFn::constant(0);
  if (spec.rfind("const:", 0) == 0) return AlphaFn::constant(std::stoll(spec.substr(6)));
  if (spec.rfind("eps:", 0) == 0) return AlphaFn::indicator(std::stoll(spec.substr(4)));
  if (spec.rfind("table:", 0) == 0) {
    std::map<long long, long long> table;
    AlphaFn::Fallback fb = AlphaFn::Fallback::none;
    long long fbv = 0;
    std::string body = spec.substr(6);
    std::istringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::invalid_input, "bad alpha table entry: " + item);
      std::string key = item.substr(0, eq);
      std::string val = item.substr(eq + 1);
      if (key == "default") {
        if (val == "identity") {
          fb = AlphaFn::Fallback::identity;
        } else {
          fb = AlphaFn::Fallback::constant;
          fbv = std::stoll(val);
        }
      } else {
        table[std::stoll(key)] = std::stoll(val);
      }
    }
    return AlphaFn::table(std::move(table), fb, fbv);
  }
  throw Error(ErrorKind::invalid_input, "unknown alpha spec: " + spec);
}

std::string fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PSIKIT_FIXTURES")) return env;
  return "fixtures";
}

// ---------------------------------------------------------------- psi-curve

int run_psi_curve(const std::string& poly, const std::string& format) {
  PlaneCurve curve = parse_curve_affine(poly);
  LocalResolution res = resolve_local(curve.affine());
  Int psi_p = psi_at(res);
  Int mu = milnor_from_psi(res);
  if (format == "json") {
    json o;
    o["poly"] = poly;
    o["nodes"] = json::array();
    for (const auto& n : res.nodes)
      o["nodes"].push_back({{"id", "E" + std::to_string(n.id + 1)},
                            {"mult", n.mult},
                            {"discrepancy", n.discrepancy},
                            {"contacts", n.contacts}});
    o["branches"] = res.branch_count;
    o["blowups"] = res.blowup_count;
    o["mult_sequence"] = res.mult_sequence;
    o["psi"] = static_cast<long long>(psi_p);
    o["mu"] = static_cast<long long>(mu);
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "curve: " << poly << "  (resolved at the origin)\n";
    std::cout << "  id   mult  disc  contacts\n";
    for (const auto& n : res.nodes)
      std::cout << "  E" << n.id + 1 << "    " << n.mult << "     " << n.discrepancy << "     "
                << n.contacts << "\n";
    std::cout << "branches: " << res.branch_count << "  blowups: " << res.blowup_count << "\n";
    std::cout << "psi(p) = " << psi_p << "\n";
    std::cout << "mu(p)  = " << mu << "\n";
  }
  return kExitOk;
}

int run_milnor(const std::string& poly, const std::string& format) {
  PlaneCurve curve = parse_curve_affine(poly);
  Int mu = milnor_oracle(curve.affine());
  if (format == "json") {
    json o;
    o["poly"] = poly;
    o["mu"] = static_cast<long long>(mu);
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "mu(origin) = " << mu << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- model verbs

int run_model_psi(const std::string& path, const std::string& alpha_spec,
                  const std::string& format) {
  NCModel m = load_model(path);
  AlphaFn alpha = parse_alpha(alpha_spec);
  BucketFunction b = psi(m, alpha);
  if (format == "json") {
    json o;
    o["model"] = path;
    o["alpha"] = alpha.name();
    o["psi"] = bucket_json(b);
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "psi (alpha = " << alpha.name() << ")\n";
    for (const auto& [p, v] : b) std::cout << "  " << p << " -> " << v.str() << "\n";
  }
  return kExitOk;
}

int run_model_motivic(const std::string& path, const std::string& alpha_spec,
                      const std::string& scope_spec, const std::string& format) {
  NCModel m = load_model(path);
  AlphaFn alpha = parse_alpha(alpha_spec);
  Scope scope = Scope::total();
  if (scope_spec.rfind("fiber:", 0) == 0)
    scope = Scope::fiber(scope_spec.substr(6));
  else if (scope_spec != "total")
    throw Error(ErrorKind::invalid_input, "scope must be 'total' or 'fiber:POINT'");
  MTClass cls = motivic_psi(m, alpha, scope);
  EPoly lift = naive_lift(m, scope);
  if (format == "json") {
    json o;
    o["model"] = path;
    o["alpha"] = alpha.name();
    o["scope"] = scope_spec;
    o["motivic"] = mt_json(cls);
    o["euler"] = static_cast<long long>(cls.evaluate_at_one());
    json lt = json::array();
    for (const auto& t : lift.triples())
      lt.push_back({static_cast<long long>(t[0]), static_cast<long long>(t[1]),
                    static_cast<long long>(t[2])});
    o["naive_lift"] = lt;
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "motivic class (" << scope_spec << ", alpha = " << alpha.name()
              << "): " << cls.str() << "\n";
    std::cout << "euler: " << cls.evaluate_at_one() << "\n";
    std::cout << "naive lift: " << lift.str() << "\n";
  }
  return kExitOk;
}

int run_model_behrend(const std::string& path, int dim_x, const std::string& format) {
  NCModel m = load_model(path);
  std::optional<int> dx;
  if (dim_x >= 0) dx = dim_x;
  BucketFunction mu = behrend_mu(m, dx);
  BucketFunction unit = unit_reconstruction(m);
  if (format == "json") {
    json o;
    o["model"] = path;
    o["mu"] = bucket_json(mu);
    o["unit"] = bucket_json(unit);
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "mu (Behrend/Milnor) per point:\n";
    for (const auto& [p, v] : mu) std::cout << "  " << p << " -> " << v.str() << "\n";
    std::cout << "unit reconstruction per point:\n";
    for (const auto& [p, v] : unit) std::cout << "  " << p << " -> " << v.str() << "\n";
  }
  return kExitOk;
}

int run_model_blowup(const std::string& path, const std::string& center_path,
                     const std::string& new_id, const std::string& out_path) {
  NCModel m = load_model(path);
  CenterSpec c = load_center(center_path);
  NCModel next = blow_up(m, c, new_id);
  auto bad = validate(next);
  if (!bad.empty()) {
    for (const auto& b : bad) std::cerr << "violation: " << b << "\n";
    return kExitCheckFailed;
  }
  if (out_path.empty())
    std::cout << model_to_json(next);
  else
    save_model(next, out_path);
  return kExitOk;
}

int run_check_invariance(const std::string& path, std::uint64_t seed, int rounds,
                         int max_blowups, const std::string& format) {
  NCModel m = load_model(path);
  FuzzReport rep = check_blowup_invariance(m, seed, rounds, max_blowups);
  if (format == "json") {
    json o;
    o["model"] = path;
    o["seed"] = seed;
    o["rounds"] = rep.rounds;
    o["blowups"] = rep.blowups;
    o["ok"] = rep.ok;
    if (!rep.ok) o["detail"] = rep.detail;
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << ": " << rep.rounds << " rounds, " << rep.blowups
              << " blow-ups applied\n";
    if (rep.ok)
      std::cout << "all psi/motivic/naive-lift values preserved\n";
    else
      std::cout << "FAILED: " << rep.detail << "\n";
  }
  return rep.ok ? kExitOk : kExitCheckFailed;
}

int run_csm_check(const std::string& poly, const std::string& format) {
  PlaneCurve curve = parse_curve_projective(poly);
  TheoremReport rep = theorem_one_check(curve);
  bool pass = rep.equal && rep.degree_matches_fiber && rep.degree_matches_chi;
  if (format == "json") {
    json o;
    o["poly"] = poly;
    o["lhs"] = chow_json(rep.lhs);
    o["rhs"] = chow_json(rep.rhs);
    o["equal"] = rep.equal;
    o["degree_lhs"] = rat_json(rep.degree_lhs);
    o["degree_rhs"] = rat_json(rep.degree_rhs);
    o["chi_X"] = static_cast<long long>(rep.chi_curve);
    o["chi_general_fiber"] = static_cast<long long>(rep.chi_general_fiber);
    o["per_point"] = json::array();
    for (const auto& pr : rep.per_point)
      o["per_point"].push_back({{"point", pr.point.str()},
                                {"psi", static_cast<long long>(pr.psi)},
                                {"mu", static_cast<long long>(pr.mu)}});
    o["pass"] = pass;
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "curve: " << poly << "\n";
    std::cout << "lhs  = [X]*" << rep.lhs.div[0] << "H + " << rep.lhs.pts.str() << "[pt]\n";
    std::cout << "rhs  = [X]*" << rep.rhs.div[0] << "H + " << rep.rhs.pts.str() << "[pt]\n";
    std::cout << "equal: " << (rep.equal ? "yes" : "NO") << "\n";
    std::cout << "degree lhs/rhs: " << rep.degree_lhs.str() << " / " << rep.degree_rhs.str()
              << "   chi(X) = " << rep.chi_curve
              << "   chi(general fiber) = " << rep.chi_general_fiber << "\n";
    for (const auto& pr : rep.per_point)
      std::cout << "  " << pr.point.str() << ": psi = " << pr.psi << ", mu = " << pr.mu << "\n";
    std::cout << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------- fixtures-run

struct FixtureRow {
  std::string fixture, quantity, expected, computed;
  bool pass;
};

void row(std::vector<FixtureRow>& rows, const std::string& fixture, const std::string& quantity,
         const std::string& expected, const std::string& computed) {
  rows.push_back({fixture, quantity, expected, computed, expected == computed});
}

int run_fixtures(const std::string& dir_flag, const std::string& format) {
  namespace fs = std::filesystem;
  const std::string dir = fixtures_dir(dir_flag);
  std::vector<FixtureRow> rows;
  auto model = [&dir](const std::string& name) { return load_model(dir + "/" + name + ".json"); };

  {
    NCModel cusp = model("cusp");
    row(rows, "cusp", "psi(p)", "-1", psi(cusp).at("p").str());
    row(rows, "cusp", "psi^eps3(p)", "1", psi(cusp, AlphaFn::indicator(3)).at("p").str());
    row(rows, "cusp", "behrend mu(p)", "2", behrend_mu(cusp).at("p").str());
    row(rows, "cusp", "unit(p)", "1", unit_reconstruction(cusp).at("p").str());
    NCModel base = model("cusp_base_locus");
    row(rows, "cusp_base_locus", "psi(p)", "-1", psi(base).at("p").str());
    row(rows, "cusp_base_locus", "psi^eps3(p)", "-1",
        psi(base, AlphaFn::indicator(3)).at("p").str());
  }
  for (int n = 1; n <= 6; ++n) {
    NCModel chain = model("an_chain_" + std::to_string(n));
    row(rows, "an_chain_" + std::to_string(n), "psi(p)", "1", psi(chain).at("p").str());
  }
  {
    NCModel emb = model("embedded_point");
    row(rows, "embedded_point", "psi(p)", "2", psi(emb).at("p").str());
    row(rows, "embedded_point", "psi(generic)", "1", psi(emb).at("generic").str());
  }
  {
    NCModel tl = model("three_lines");
    row(rows, "three_lines", "psi(p)", "0", psi(tl).at("p").str());
    row(rows, "three_lines", "psi(generic)", "2", psi(tl).at("generic").str());
    NCModel co = model("three_lines_coplanar");
    row(rows, "three_lines_coplanar", "psi(p)", "-2", psi(co).at("p").str());
    row(rows, "three_lines_coplanar", "psi(generic)", "2", psi(co).at("generic").str());
  }
  for (int m = 2; m <= 4; ++m) {
    NCModel cone = model("cone_m" + std::to_string(m));
    long long expect = (m - 1) * (m - 1) * (m - 1) + 1;
    row(rows, "cone_m" + std::to_string(m), "psi(vertex)", std::to_string(expect),
        psi(cone).at("p").str());
    // [C] + m(3 - [C]) in the mod-torus ring, with C of genus g(m)
    long long g = (m - 1) * (m - 2) / 2;
    MTClass c_cls = mod_torus(std_class(StdKind::curve, g));
    MTClass expect_cls = c_cls + (MTClass(3) - c_cls) * Int(m);
    MTClass got = motivic_psi(cone, AlphaFn::identity(), Scope::total());
    row(rows, "cone_m" + std::to_string(m), "Psi total mod T", expect_cls.str(), got.str());
    if (m >= 3)
      row(rows, "cone_m" + std::to_string(m), "Psi non-constant", "true",
          got.is_constant() ? "false" : "true");
  }
  {
    NCModel sm = model("smooth_point");
    row(rows, "smooth_point", "psi(p)", "1", psi(sm).at("p").str());
    row(rows, "smooth_point", "mu(p)", "0", behrend_mu(sm).at("p").str());
    NCModel nd = model("node");
    row(rows, "node", "psi(p)", "0", psi(nd).at("p").str());
    row(rows, "node", "mu(p)", "1", behrend_mu(nd).at("p").str());
  }

  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (format == "json") {
    json o;
    o["fixtures"] = json::array();
    for (const auto& r : rows)
      o["fixtures"].push_back({{"fixture", r.fixture},
                               {"quantity", r.quantity},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"pass", r.pass}});
    o["pass"] = all;
    std::cout << o.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.fixture << "  " << r.quantity
                << ": expected " << r.expected << ", computed " << r.computed << "\n";
    std::cout << (all ? "all fixtures pass" : "FIXTURE FAILURES") << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"specialization functions, motivic classes and CSM identities for plane curves "
               "and normal-crossings models"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string poly, in_path, center_path, new_id, out_path, alpha_spec = "identity";
  std::string scope_spec = "total", format = "text", fixtures_flag;
  std::uint64_t seed = 1;
  int rounds = 100, max_blowups = 4, dim_x = -1;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* c1 = app.add_subcommand("psi-curve", "resolve an affine curve at the origin");
  c1->add_option("--poly", poly, "affine polynomial in x,y")->required();
  add_format(c1);

  auto* c2 = app.add_subcommand("milnor", "Milnor number at the origin (local algebra oracle)");
  c2->add_option("--poly", poly, "affine polynomial in x,y")->required();
  add_format(c2);

  auto* c3 = app.add_subcommand("model-psi", "psi values of a model at its marked points");
  c3->add_option("--in", in_path, "model JSON file")->required();
  c3->add_option("--alpha", alpha_spec, "identity|one|zero|const:K|eps:M|table:...");
  add_format(c3);

  auto* c4 = app.add_subcommand("model-motivic", "motivic class of a model");
  c4->add_option("--in", in_path, "model JSON file")->required();
  c4->add_option("--alpha", alpha_spec, "alpha spec");
  c4->add_option("--scope", scope_spec, "total or fiber:POINT");
  add_format(c4);

  auto* c5 = app.add_subcommand("model-behrend", "Behrend/Milnor function of a model");
  c5->add_option("--in", in_path, "model JSON file")->required();
  c5->add_option("--dim-x", dim_x, "dimension of X (default ambient_dim - 1)");
  add_format(c5);

  auto* c6 = app.add_subcommand("model-blowup", "apply a blow-up rewrite to a model");
  c6->add_option("--in", in_path, "model JSON file")->required();
  c6->add_option("--center", center_path, "center JSON file")->required();
  c6->add_option("--new-id", new_id, "fresh component id")->required();
  c6->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* c7 = app.add_subcommand("check-invariance", "fuzz blow-up invariance of a model");
  c7->add_option("--in", in_path, "model JSON file")->required();
  c7->add_option("--seed", seed, "random seed");
  c7->add_option("--rounds", rounds, "number of random sequences");
  c7->add_option("--max-blowups", max_blowups, "max blow-ups per sequence");
  add_format(c7);

  auto* c8 = app.add_subcommand("csm-check", "Chern-class specialization identity for a curve");
  c8->add_option("--poly", poly, "homogeneous polynomial in x,y,z")->required();
  add_format(c8);

  auto* c9 = app.add_subcommand("fixtures-run", "evaluate the shipped fixture corpus");
  c9->add_option("--fixtures", fixtures_flag, "fixture directory (default $PSIKIT_FIXTURES)");
  add_format(c9);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c1->parsed()) return run_psi_curve(poly, format);
    if (c2->parsed()) return run_milnor(poly, format);
    if (c3->parsed()) return run_model_psi(in_path, alpha_spec, format);
    if (c4->parsed()) return run_model_motivic(in_path, alpha_spec, scope_spec, format);
    if (c5->parsed()) return run_model_behrend(in_path, dim_x, format);
    if (c6->parsed()) return run_model_blowup(in_path, center_path, new_id, out_path);
    if (c7->parsed()) return run_check_invariance(in_path, seed, rounds, max_blowups, format);
    if (c8->parsed()) return run_csm_check(poly, format);
    if (c9->parsed()) return run_fixtures(fixtures_flag, format);
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::invalid_input ? kExitUsage : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
