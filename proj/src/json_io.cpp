#include "repkit/json_io.hpp"

#include <sstream>

namespace repkit {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class q_parse(const Json& j) {
  if (!j.is_string()) fail(errc::input_error, "expected a rational string");
  try {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    fail(errc::input_error, "malformed rational '" + j.get<std::string>() + "'");
  }
}

} // namespace

Json scalar_to_json(const Scalar& s) {
  if (auto g = s.gaussian()) {
    Json j;
    j["re"] = q_str(g->first);
    j["im"] = q_str(g->second);
    return j;
  }
  if (auto form = s.as_root_times_gaussian()) {
    Json j;
    j["root"] = Json{{"N", form->N}, {"k", form->k}};
    j["coef"] = Json{{"re", q_str(form->coef_re)}, {"im", q_str(form->coef_im)}};
    return j;
  }
  // value left the tagged-root representation: fall back to the float form
  CD z = s.to_complex();
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json scalar_to_json(const CD& s) { return Json{{"re", s.real()}, {"im", s.imag()}}; }

std::variant<Scalar, CD> scalar_from_json(const Json& j) {
  if (!j.is_object()) fail(errc::input_error, "scalar must be an object");
  if (j.contains("root")) {
    const Json& r = j.at("root");
    if (!r.contains("N") || !r.contains("k"))
      fail(errc::input_error, "root tag needs N and k");
    Scalar root = Scalar::root_of_unity(r.at("N").get<int>(), r.at("k").get<long>());
    Scalar coef(1);
    if (j.contains("coef")) {
      const Json& c = j.at("coef");
      coef = Scalar(q_parse(c.at("re")), q_parse(c.at("im")));
    }
    return Scalar(coef * root);
  }
  if (!j.contains("re") || !j.contains("im"))
    fail(errc::input_error, "scalar needs re and im");
  if (j.at("re").is_string() != j.at("im").is_string())
    fail(errc::input_error, "scalar mixes exact and float parts");
  if (j.at("re").is_string()) return Scalar(q_parse(j.at("re")), q_parse(j.at("im")));
  return CD(j.at("re").get<double>(), j.at("im").get<double>());
}

Json matrix_to_json(const CMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const FMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(CD(m(r, c))));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::variant<CMat, FMat> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.at(0).is_array() || j.at(0).empty())
    fail(errc::input_error, "matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  auto first = scalar_from_json(j.at(0).at(0));
  bool exact = std::holds_alternative<Scalar>(first);
  CMat cm;
  FMat fm;
  if (exact) cm = CMat::Constant(rows, cols, Scalar(0));
  else fm = FMat::Zero(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(r).size()) != cols)
      fail(errc::input_error, "matrix rows have unequal lengths");
    for (int c = 0; c < cols; ++c) {
      auto v = scalar_from_json(j.at(r).at(c));
      if (std::holds_alternative<Scalar>(v) != exact)
        fail(errc::input_error, "matrix mixes exact and float entries");
      if (exact) cm(r, c) = std::get<Scalar>(v);
      else fm(r, c) = std::get<CD>(v);
    }
  }
  if (exact) return cm;
  return fm;
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["labels"] = g.labels();
  j["table"] = g.table();
  j["identity"] = g.identity();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("table") ||
      !j.contains("identity"))
    fail(errc::input_error, "group needs labels, table and identity");
  try {
    return std::make_shared<FiniteGroup>(j.at("labels").get<std::vector<std::string>>(),
                                         j.at("table").get<std::vector<std::vector<int>>>(),
                                         j.at("identity").get<int>());
  } catch (const Json::exception& e) {
    fail(errc::input_error, std::string("malformed group: ") + e.what());
  }
}

namespace {

template <typename S>
Json rep_to_json_impl(const Rep<S>& rho) {
  Json j;
  j["group"] = group_to_json(*rho.parent());
  if (!rho.domain().is_full()) {
    Json sub = Json::array();
    for (int e : rho.domain().elements()) sub.push_back(rho.parent()->label(e));
    j["subgroup"] = std::move(sub);
  }
  j["dim"] = rho.dim();
  Json mats;
  for (int e : rho.domain().elements())
    mats[rho.parent()->label(e)] = matrix_to_json(rho.at(e));
  j["matrices"] = std::move(mats);
  return j;
}

} // namespace

Json rep_to_json(const MatrixRep& rho) { return rep_to_json_impl(rho); }
Json rep_to_json(const FloatRep& rho) { return rep_to_json_impl(rho); }

std::variant<MatrixRep, FloatRep> rep_from_json(const Json& j, double tol) {
  if (!j.is_object() || !j.contains("group") || !j.contains("matrices"))
    fail(errc::input_error, "rep needs group and matrices");
  GroupPtr g = group_from_json(j.at("group"));
  Subgroup domain = Subgroup::full(g);
  if (j.contains("subgroup")) {
    std::vector<int> elems;
    for (const auto& l : j.at("subgroup")) {
      auto idx = g->index_of(l.get<std::string>());
      if (!idx) fail(errc::input_error, "unknown subgroup label '" + l.get<std::string>() + "'");
      elems.push_back(*idx);
    }
    domain = Subgroup(g, std::move(elems));
  }
  std::vector<CMat> cmats(domain.size());
  std::vector<FMat> fmats(domain.size());
  int exact_seen = -1;
  for (int e : domain.elements()) {
    const std::string& label = g->label(e);
    if (!j.at("matrices").contains(label))
      fail(errc::input_error, "missing matrix for element '" + label + "'");
    auto m = matrix_from_json(j.at("matrices").at(label));
    int exact = std::holds_alternative<CMat>(m) ? 1 : 0;
    if (exact_seen >= 0 && exact != exact_seen)
      fail(errc::input_error, "rep mixes exact and float matrices");
    exact_seen = exact;
    if (exact) cmats[domain.pos(e)] = std::get<CMat>(m);
    else fmats[domain.pos(e)] = std::get<FMat>(m);
  }
  if (exact_seen == 1) return MatrixRep(std::move(domain), std::move(cmats));
  return FloatRep(std::move(domain), std::move(fmats), tol);
}

Json table_to_json(const CocycleTable& t) {
  Json j;
  j["n"] = t.n;
  j["m"] = t.m;
  Json beta;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      beta[t.quotient->label(x) + "," + t.quotient->label(y)] = t.exp[x][y];
  j["beta"] = std::move(beta);
  j["quotient"] = group_to_json(*t.quotient);
  return j;
}

CocycleTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("beta") || !j.contains("quotient"))
    fail(errc::input_error, "cocycle table needs n, beta and quotient");
  CocycleTable t;
  t.quotient = group_from_json(j.at("quotient"));
  t.n = j.at("n").get<int>();
  if (t.n != t.quotient->order())
    fail(errc::input_error, "n must equal the quotient order");
  t.exp.assign(t.n, std::vector<long>(t.n, 0));
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      std::string key = t.quotient->label(x) + "," + t.quotient->label(y);
      if (!j.at("beta").contains(key))
        fail(errc::input_error, "beta table is missing entry '" + key + "'");
      t.exp[x][y] = j.at("beta").at(key).get<long>();
    }
  long gcd_all = t.n;
  for (const auto& row : t.exp)
    for (long k : row) gcd_all = std::gcd(gcd_all, ((k % t.n) + t.n) % t.n);
  t.m = static_cast<int>(t.n / gcd_all);
  return t;
}

namespace {

template <typename S>
Json report_to_json_impl(const DecompositionReport<S>& r) {
  Json j;
  j["dim"] = r.dim;
  j["seed"] = r.seed;
  Json comps = Json::array();
  for (size_t k = 0; k < r.components.size(); ++k) {
    Json c;
    c["dim"] = static_cast<int>(r.components[k].basis.cols());
    c["class"] = r.components[k].cls;
    c["basis"] = matrix_to_json(r.components[k].basis);
    if (k < r.lambdas.size() && r.lambdas[k]) c["lambda"] = matrix_to_json(*r.lambdas[k]);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  j["classes"] = r.classes;
  return j;
}

} // namespace

Json report_to_json(const DecompositionReport<Scalar>& r) { return report_to_json_impl(r); }
Json report_to_json(const DecompositionReport<CD>& r) { return report_to_json_impl(r); }

Json structure_constants_to_json(const LieAlgebraBasis& alg) {
  Json j;
  j["dim"] = alg.dim();
  Json basis = Json::array();
  for (const auto& b : alg.basis()) {
    Json m = Json::array();
    for (int r = 0; r < 8; ++r) {
      Json row = Json::array();
      for (int c = 0; c < 8; ++c) row.push_back(static_cast<long>(b(r, c).rational()->get_num().get_si()));
      m.push_back(std::move(row));
    }
    basis.push_back(std::move(m));
  }
  j["basis"] = std::move(basis);
  Json brackets;
  for (int i = 0; i < alg.dim(); ++i)
    for (int k = 0; k < alg.dim(); ++k) {
      const auto& entries = alg.structure(i, k);
      if (entries.empty()) continue;
      Json e;
      for (const auto& [l, v] : entries) e[std::to_string(l)] = q_str(*v.rational());
      brackets[std::to_string(i) + "," + std::to_string(k)] = std::move(e);
    }
  j["brackets"] = std::move(brackets);
  return j;
}

namespace {

void render(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << prefix << it.key() << ":\n";
        render(it.value(), prefix + "  ", os);
      } else {
        os << prefix << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) flat = false;
    if (flat) {
      os << prefix << j.dump() << "\n";
    } else {
      int idx = 0;
      for (const auto& v : j) {
        os << prefix << "- [" << idx++ << "]\n";
        render(v, prefix + "  ", os);
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

} // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, "", os);
  return os.str();
}

} // namespace repkit
