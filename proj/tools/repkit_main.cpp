#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "repkit/fixtures.hpp"
#include "repkit/gk_sl2.hpp"
#include "repkit/json_io.hpp"

using namespace repkit;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::string out_path;
  uint64_t seed = 12345;
  double tol = 1e-9;
  std::string fixture;
  std::string input;
};

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::input_error, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(errc::input_error, "parse error in '" + path + "': " + e.what());
  }
}

GroupPtr load_group(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    return group_from_json(load_json_file(spec));
  return build_group(spec);
}

std::variant<MatrixRep, FloatRep> load_rep(const GlobalOpts& g) {
  if (!g.fixture.empty()) return fixture_rep(g.fixture);
  if (!g.input.empty()) return rep_from_json(load_json_file(g.input), g.tol);
  fail(errc::input_error, "need --fixture or --input");
}

CocycleTable load_table(const GlobalOpts& g) {
  if (g.fixture == "tensor" || (g.fixture.empty() && g.input.empty())) {
    TensorParams p = tensor_fixture();
    TensorModel model =
        tensor_model(p.lambda1, p.lambda2, p.parity1, p.parity2, p.window);
    return beta_table(model.family);
  }
  if (!g.input.empty()) return table_from_json(load_json_file(g.input));
  // any character fixture gives a normalized family over its full group
  MatrixRep rho = fixture_rep(g.fixture);
  auto family = build_family(rho, Subgroup::full(rho.parent()));
  return beta_table(family);
}

int emit(const GlobalOpts& g, const Json& report, int code) {
  std::string text = g.format == "text" ? render_text(report) : report.dump(2) + "\n";
  if (!g.out_path.empty()) {
    std::ofstream out(g.out_path);
    if (!out) fail(errc::input_error, "cannot write '" + g.out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
  return code;
}

Json decomposition_summary(const DecompositionReport<Scalar>& report) {
  Json j;
  j["component_count"] = static_cast<int>(report.components.size());
  j["class_count"] = static_cast<int>(report.classes.size());
  Json dims = Json::array();
  for (const auto& c : report.components) dims.push_back(static_cast<int>(c.basis.cols()));
  j["dims"] = std::move(dims);
  j["classes"] = report.classes;
  return j;
}

int cmd_rep_decompose(const GlobalOpts& g) {
  auto loaded = load_rep(g);
  Json report;
  report["command"] = "rep decompose";
  if (std::holds_alternative<FloatRep>(loaded)) {
    const auto& rho = std::get<FloatRep>(loaded);
    DecomposeOptions opts;
    opts.seed = g.seed;
    opts.tol = g.tol;
    FloatRep target = rho.domain().is_full() ? rho : induce(rho);
    auto dec = decompose(target, opts);
    report["mode"] = "float";
    report["result"] = report_to_json(dec);
    return emit(g, report, 0);
  }
  const auto& rho = std::get<MatrixRep>(loaded);
  DecomposeOptions opts;
  opts.seed = g.seed;
  MatrixRep target = rho.domain().is_full() ? rho : induce(rho);
  auto dec = decompose(target, opts);
  report["mode"] = "exact";
  report["summary"] = decomposition_summary(dec);
  // cross-check multiplicities through the exact character inner product
  bool ok = true;
  Json mults = Json::array();
  for (size_t cls = 0; cls < dec.classes.size(); ++cls) {
    const auto& members = dec.classes[cls];
    MatrixRep comp = restrict_to_subspace(target, dec.components[members[0]].basis);
    Scalar by_char = character_inner_product(target, comp);
    Json e;
    e["class"] = static_cast<int>(cls);
    e["by_decomposition"] = static_cast<int>(members.size());
    e["by_character"] = scalar_to_json(by_char);
    bool match = by_char == Scalar(static_cast<long>(members.size()));
    e["match"] = match;
    ok = ok && match;
    mults.push_back(std::move(e));
  }
  report["multiplicities"] = std::move(mults);
  report["multiplicities_consistent"] = ok;
  report["result"] = report_to_json(dec);
  return emit(g, report, ok ? 0 : 1);
}

int cmd_rep_induce(const GlobalOpts& g) {
  auto loaded = load_rep(g);
  Json report;
  report["command"] = "rep induce";
  if (std::holds_alternative<FloatRep>(loaded)) {
    const auto& rho = std::get<FloatRep>(loaded);
    FloatRep ind = induce(rho);
    report["mode"] = "float";
    report["dim"] = ind.dim();
    report["rep"] = rep_to_json(ind);
    return emit(g, report, 0);
  }
  const auto& rho = std::get<MatrixRep>(loaded);
  MatrixRep ind = induce(rho);
  report["mode"] = "exact";
  report["dim"] = ind.dim();
  // character computed from the blocks and from the induced-character formula
  auto chi = character(ind);
  auto chi2 = induced_character_formula(rho);
  bool same = true;
  Json chi_json = Json::array();
  for (size_t k = 0; k < chi.size(); ++k) {
    same = same && chi[k] == chi2[k];
    chi_json.push_back(scalar_to_json(chi[k]));
  }
  report["character"] = std::move(chi_json);
  report["character_formula_agrees"] = same;
  report["rep"] = rep_to_json(ind);
  return emit(g, report, same ? 0 : 1);
}

int cmd_rep_frobenius(const GlobalOpts& g, bool suite) {
  Json report;
  report["command"] = "rep check-frobenius";
  Json rows = Json::array();
  bool ok = true;
  auto run_one = [&](const std::string& name, const MatrixRep& rho) {
    auto [lhs, rhs] = frobenius_check(rho);
    Json e;
    e["model"] = name;
    e["end_dim"] = lhs;
    e["hom_sum"] = rhs;
    e["equal"] = lhs == rhs;
    ok = ok && lhs == rhs;
    rows.push_back(std::move(e));
  };
  if (suite) {
    for (const auto& model : frobenius_suite()) run_one(model.name, model.rep);
  } else {
    auto loaded = load_rep(g);
    if (!std::holds_alternative<MatrixRep>(loaded))
      fail(errc::input_error, "frobenius check needs an exact rep");
    run_one(g.fixture.empty() ? g.input : g.fixture, std::get<MatrixRep>(loaded));
  }
  report["models"] = std::move(rows);
  report["all_equal"] = ok;
  return emit(g, report, ok ? 0 : 1);
}

int cmd_rep_g2(const GlobalOpts& g, bool suite) {
  Json report;
  report["command"] = "rep check-g2";
  Json rows = Json::array();
  bool ok = true;
  auto run_one = [&](const std::string& name, const MatrixRep& rho) {
    auto res = g2_irreducibility_check(rho, g.seed);
    Json e;
    e["model"] = name;
    e["g2_order"] = static_cast<int>(res.g2_elements.size());
    e["components"] = res.component_count;
    e["all_induced_irreducible"] = res.ok;
    ok = ok && res.ok;
    rows.push_back(std::move(e));
  };
  if (suite) {
    for (const auto& model : g2_suite()) run_one(model.name, model.rep);
  } else {
    auto loaded = load_rep(g);
    if (!std::holds_alternative<MatrixRep>(loaded))
      fail(errc::input_error, "g2 check needs an exact rep");
    run_one(g.fixture.empty() ? g.input : g.fixture, std::get<MatrixRep>(loaded));
  }
  report["models"] = std::move(rows);
  report["all_ok"] = ok;
  return emit(g, report, ok ? 0 : 1);
}

int cmd_beta_table(const GlobalOpts& g) {
  CocycleTable table = load_table(g);
  Json report;
  report["command"] = "beta table";
  report["table"] = table_to_json(table);
  auto check = verify_cocycle(table);
  report["cocycle_identity_ok"] = check.cocycle_violations.empty();
  report["row_products_ok"] = check.row_violations.empty() && check.col_violations.empty();
  report["roots_ok"] = check.power_violations.empty();
  return emit(g, report, 0);
}

int cmd_beta_verify(const GlobalOpts& g) {
  CocycleTable table = load_table(g);
  auto check = verify_cocycle(table);
  Json report;
  report["command"] = "beta verify";
  report["n"] = table.n;
  report["m"] = table.m;
  Json v;
  v["cocycle_identity"] = Json::array();
  for (auto [x, y, z] : check.cocycle_violations)
    v["cocycle_identity"].push_back(Json::array(
        {table.quotient->label(x), table.quotient->label(y), table.quotient->label(z)}));
  v["row_products"] = check.row_violations;
  v["column_products"] = check.col_violations;
  v["roots"] = Json::array();
  for (auto [x, y] : check.power_violations)
    v["roots"].push_back(
        Json::array({table.quotient->label(x), table.quotient->label(y)}));
  report["violations"] = std::move(v);
  report["ok"] = check.ok();
  return emit(g, report, check.ok() ? 0 : 1);
}

int cmd_pipeline_gogi(const GlobalOpts& g) {
  auto loaded = load_rep(g);
  if (!std::holds_alternative<MatrixRep>(loaded))
    fail(errc::input_error, "gogi needs an exact character fixture");
  DecomposeOptions opts;
  opts.seed = g.seed;
  auto res = gogi_pipeline(std::get<MatrixRep>(loaded), opts);
  Json report;
  report["command"] = "pipeline gogi";
  report["summary"] = decomposition_summary(res.report);
  report["result"] = report_to_json(res.report);
  return emit(g, report, 0);
}

int cmd_pipeline_gogii(const GlobalOpts& g) {
  CocycleTable table = load_table(g);
  DecomposeOptions opts;
  opts.seed = g.seed;
  auto res = gogii_pipeline(table, opts);
  Json report;
  report["command"] = "pipeline gogii";
  report["f2"] = group_to_json(*res.f2);
  report["f2_order"] = res.f2->order();
  report["m"] = table.m;
  report["summary"] = decomposition_summary(res.report);
  report["result"] = report_to_json(res.report);
  return emit(g, report, 0);
}

int cmd_sl2_demo(const GlobalOpts& g, const std::string& lambda_str,
                 const std::string& lambda2_str, const std::string& parity_str,
                 int window, bool tensor) {
  mpq_class lam;
  try {
    lam = mpq_class(lambda_str);
    lam.canonicalize();
  } catch (const std::exception&) {
    fail(errc::input_error, "malformed --lambda '" + lambda_str + "'");
  }
  int parity = parity_str == "odd" ? 1 : 0;
  if (parity_str != "odd" && parity_str != "even")
    fail(errc::input_error, "--parity must be odd or even");
  Json report;
  report["command"] = "sl2 demo";
  bool ok = true;
  if (!tensor) {
    int adjusted = (window % 2 == parity) ? window : window + 1;
    GKWindow w = make_window<Scalar>(Scalar(lam), parity, adjusted);
    report["lambda"] = lam.get_str();
    report["parity"] = parity_str;
    report["window"] = adjusted;
    report["irreducible"] = w.irreducible;
    auto rel = check_sl2_relations(w);
    auto twist = check_s_x_intertwining(w);
    report["bracket_relations_ok"] = rel.ok();
    report["s_x_intertwines"] = twist.ok();
    ok = rel.ok() && twist.ok();
    if (w.irreducible) {
      InducedWindow iw = induce_disconnected(w);
      Json split;
      split["projectors_idempotent"] =
          is_zero(CMat(sparse_mul(iw.p0, iw.p0) - iw.p0)) &&
          is_zero(CMat(sparse_mul(iw.p1, iw.p1) - iw.p1));
      split["projectors_orthogonal"] = is_zero(sparse_mul(iw.p0, iw.p1));
      split["projectors_sum_to_identity"] =
          is_zero(CMat(iw.p0 + iw.p1 - identity(2 * w.count())));
      bool inv = commute_on_columns(iw.p0, iw.h, iw.interior_columns) &&
                 commute_on_columns(iw.p0, iw.x, iw.interior_columns) &&
                 commute_on_columns(iw.p0, iw.y, iw.interior_columns) &&
                 commute_on_columns(iw.p0, iw.component, iw.interior_columns);
      split["u0_invariant"] = inv;
      Json ktypes = Json::array();
      for (const auto& pair : iw.ktypes) {
        Json e;
        e["weight"] = pair.weight;
        e["z0_dim"] = static_cast<int>(pair.z0.cols());
        e["z1_dim"] = static_cast<int>(pair.z1.cols());
        ktypes.push_back(std::move(e));
      }
      split["k_types"] = std::move(ktypes);
      for (auto& [key, value] : split.items())
        if (value.is_boolean()) ok = ok && value.get<bool>();
      report["induced_split"] = std::move(split);
    }
    return emit(g, report, ok ? 0 : 1);
  }
  mpq_class lam2 = lam;
  if (!lambda2_str.empty()) {
    try {
      lam2 = mpq_class(lambda2_str);
      lam2.canonicalize();
    } catch (const std::exception&) {
      fail(errc::input_error, "malformed --lambda2 '" + lambda2_str + "'");
    }
  }
  TensorModel model = tensor_model(Scalar(lam), Scalar(lam2), parity, parity, window);
  report["lambda1"] = lam.get_str();
  report["lambda2"] = lam2.get_str();
  report["parity"] = parity_str;
  report["window"] = model.w1.J;
  CocycleTable table = beta_table(model.family);
  report["beta"] = table_to_json(table);
  DecomposeOptions opts;
  opts.seed = g.seed;
  auto res = gogii_pipeline(table, opts);
  report["f2_order"] = res.f2->order();
  report["summary"] = decomposition_summary(res.report);
  auto check = verify_cocycle(table);
  ok = check.cocycle_violations.empty() && check.power_violations.empty();
  report["cocycle_ok"] = ok;
  return emit(g, report, ok ? 0 : 1);
}

int cmd_so44(const GlobalOpts& g, const std::string& which, const std::string& emit_path) {
  LieAlgebraBasis alg = build_so44();
  Json report;
  report["command"] = "so44 verify";
  report["dim"] = alg.dim();
  bool ok = true;
  for (const auto& b : alg.basis())
    ok = ok && LieAlgebraBasis::satisfies_defining_relation(b);
  report["defining_relation_ok"] = ok;
  bool jac = alg.jacobi_holds();
  report["jacobi_ok"] = jac;
  ok = ok && jac;
  std::vector<AlgebraMap> maps;
  auto want = [&](const std::string& name) { return which == "all" || which == name; };
  if (want("x12")) maps.push_back(map_x12(alg));
  if (want("x34")) maps.push_back(map_x34(alg));
  if (want("swap")) maps.push_back(map_swap(alg));
  if (want("cartan")) maps.push_back(map_cartan(alg));
  if (want("phi1234")) maps.push_back(phi_1234(alg));
  if (maps.empty()) fail(errc::input_error, "unknown map '" + which + "'");
  Json rows = Json::array();
  std::vector<std::array<int, 4>> perms;
  for (const auto& m : maps) {
    auto rep = verify_automorphism(alg, m);
    auto perm = induced_permutation(alg, m);
    perms.push_back(perm);
    Json e;
    e["map"] = m.name;
    e["automorphism"] = rep.ok();
    e["violations"] = static_cast<int>(rep.violations.size());
    e["permutation"] = Json::array({perm[0] + 1, perm[1] + 1, perm[2] + 1, perm[3] + 1});
    e["order_as_linear_map"] = map_order(m);
    ok = ok && rep.ok();
    rows.push_back(std::move(e));
  }
  report["maps"] = std::move(rows);
  if (which == "all") {
    int order = s4_generation_check(perms);
    report["generated_permutation_group_order"] = order;
    ok = ok && order == 24;
  }
  report["ok"] = ok;
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) fail(errc::input_error, "cannot write '" + emit_path + "'");
    out << structure_constants_to_json(alg).dump(2) << "\n";
    report["structure_constants_written_to"] = emit_path;
  }
  return emit(g, report, ok ? 0 : 1);
}

int cmd_group(const GlobalOpts& g, const std::string& action, const std::string& name,
              const std::string& other) {
  Json report;
  report["command"] = "group " + action;
  if (action == "build") {
    GroupPtr grp = load_group(name);
    report["order"] = grp->order();
    report["abelian"] = grp->is_abelian();
    report["group"] = group_to_json(*grp);
    return emit(g, report, 0);
  }
  if (action == "center") {
    GroupPtr grp = load_group(name);
    Subgroup z = center(grp);
    Json labels = Json::array();
    for (int e : z.elements()) labels.push_back(grp->label(e));
    report["order"] = grp->order();
    report["center_order"] = z.size();
    report["center"] = std::move(labels);
    return emit(g, report, 0);
  }
  if (action == "extension") {
    CocycleTable table = table_from_json(load_json_file(name));
    auto res = gogii_pipeline(table, DecomposeOptions{g.seed});
    report["order"] = res.f2->order();
    report["group"] = group_to_json(*res.f2);
    return emit(g, report, 0);
  }
  if (action == "isomorphic") {
    GroupPtr a = load_group(name), b = load_group(other);
    auto iso = isomorphic(a, b);
    report["isomorphic"] = iso.has_value();
    if (iso) {
      Json map;
      for (int k = 0; k < a->order(); ++k) map[a->label(k)] = b->label((*iso)[k]);
      report["mapping"] = std::move(map);
    }
    return emit(g, report, 0);
  }
  fail(errc::input_error, "unknown group action '" + action + "'");
}

int cmd_fixtures(const GlobalOpts& g, const std::string& action, const std::string& name) {
  Json report;
  if (action == "list" || action.empty()) {
    report["command"] = "fixtures list";
    report["fixtures"] = fixture_names();
    return emit(g, report, 0);
  }
  if (action == "emit") {
    report = fixture_json(name);
    return emit(g, report, 0);
  }
  fail(errc::input_error, "unknown fixtures action '" + action + "'");
}

} // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  CLI::App app{"finite-group induction, intertwiner cocycles and so(4,4) verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "random seed for decompositions");
  app.add_option("--tol", g.tol, "float-mode tolerance");
  app.add_option("-o,--output", g.out_path, "write the report to a file");

  auto* grp = app.add_subcommand("group", "build and inspect finite groups");
  std::string group_action, group_name, group_other;
  grp->add_option("action", group_action, "build|center|extension|isomorphic")->required();
  grp->add_option("name", group_name, "builder name or .json file");
  grp->add_option("--a", group_name, "first group (isomorphic)");
  grp->add_option("--b", group_other, "second group (isomorphic)");
  grp->add_option("--table", group_name, "cocycle table file (extension)");

  auto* rep = app.add_subcommand("rep", "induce, decompose and check representations");
  std::string rep_action;
  bool rep_suite = false;
  rep->add_option("action", rep_action, "induce|decompose|check-frobenius|check-g2")->required();
  rep->add_option("--fixture", g.fixture, "bundled fixture name");
  rep->add_option("--input", g.input, "rep JSON file");
  rep->add_flag("--suite", rep_suite, "run the whole bundled suite");

  auto* beta = app.add_subcommand("beta", "intertwiner cocycle tables");
  std::string beta_action;
  beta->add_option("action", beta_action, "table|verify")->required();
  beta->add_option("--fixture", g.fixture, "fixture name (default: tensor)");
  beta->add_option("--input", g.input, "cocycle table JSON file");

  auto* pipe = app.add_subcommand("pipeline", "induction pipelines");
  std::string pipe_action;
  pipe->add_option("action", pipe_action, "gogi|gogii")->required();
  pipe->add_option("--fixture", g.fixture, "fixture name");
  pipe->add_option("--input", g.input, "input JSON file");

  auto* sl2 = app.add_subcommand("sl2", "windowed sl(2) module demo");
  std::string lambda_str = "1/3", lambda2_str, parity_str = "odd";
  int window = 21;
  bool tensor_flag = false;
  sl2->add_option("demo", pipe_action)->check(CLI::IsMember({"demo"}));
  sl2->add_option("--lambda", lambda_str, "rational parameter p/q");
  sl2->add_option("--lambda2", lambda2_str, "second factor parameter (tensor mode)");
  sl2->add_option("--parity", parity_str, "odd or even");
  sl2->add_option("--window", window, "window bound J");
  sl2->add_flag("--tensor", tensor_flag, "run the two-factor tensor model");

  auto* so = app.add_subcommand("so44", "so(4,4) automorphism verification");
  std::string so_action = "verify", so_map = "all", so_emit;
  so->add_option("action", so_action)->check(CLI::IsMember({"verify"}));
  so->add_option("--map", so_map, "x12|x34|swap|cartan|phi1234|all");
  so->add_option("--emit-structure-constants", so_emit, "write structure constants JSON");

  auto* fix = app.add_subcommand("fixtures", "bundled inputs");
  std::string fix_action = "list", fix_name;
  fix->add_option("action", fix_action, "list|emit");
  fix->add_option("name", fix_name, "fixture name (emit)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (grp->parsed()) return cmd_group(g, group_action, group_name, group_other);
    if (rep->parsed()) {
      if (rep_action == "induce") return cmd_rep_induce(g);
      if (rep_action == "decompose") return cmd_rep_decompose(g);
      if (rep_action == "check-frobenius") return cmd_rep_frobenius(g, rep_suite || g.fixture.empty() && g.input.empty());
      if (rep_action == "check-g2") return cmd_rep_g2(g, rep_suite || g.fixture.empty() && g.input.empty());
      fail(errc::input_error, "unknown rep action '" + rep_action + "'");
    }
    if (beta->parsed()) {
      if (beta_action == "table") return cmd_beta_table(g);
      if (beta_action == "verify") return cmd_beta_verify(g);
      fail(errc::input_error, "unknown beta action '" + beta_action + "'");
    }
    if (pipe->parsed()) {
      if (pipe_action == "gogi") return cmd_pipeline_gogi(g);
      if (pipe_action == "gogii") return cmd_pipeline_gogii(g);
      fail(errc::input_error, "unknown pipeline action '" + pipe_action + "'");
    }
    if (sl2->parsed())
      return cmd_sl2_demo(g, lambda_str, lambda2_str, parity_str, window, tensor_flag);
    if (so->parsed()) return cmd_so44(g, so_map, so_emit);
    if (fix->parsed()) return cmd_fixtures(g, fix_action, fix_name);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::input_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
