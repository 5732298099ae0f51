#include "repkit/fixtures.hpp"

#include <algorithm>
#include <map>

namespace repkit {

namespace {

Subgroup subgroup_by_labels(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<int> elems;
  for (const auto& l : labels) elems.push_back(*g->index_of(l));
  return Subgroup(g, std::move(elems));
}

MatrixRep char_model(const std::string& group, const std::vector<std::string>& sub,
                     const std::string& generator, const Scalar& root) {
  GroupPtr g = build_group(group);
  Subgroup h = subgroup_by_labels(g, sub);
  return cyclic_character(h, *g->index_of(generator), root);
}

MatrixRep value_model(const std::string& group, const std::vector<std::string>& sub,
                      const std::vector<std::pair<std::string, Scalar>>& values) {
  GroupPtr g = build_group(group);
  Subgroup h = subgroup_by_labels(g, sub);
  std::vector<Scalar> v(h.size());
  for (const auto& [label, val] : values) v[h.pos(*g->index_of(label))] = val;
  return character_rep<Scalar>(h, v);
}

std::map<std::string, MatrixRep> build_models() {
  std::map<std::string, MatrixRep> m;
  const Scalar one(1), minus(-1);
  const Scalar omega = Scalar::root_of_unity(3, 1);
  const Scalar i = Scalar::i();
  m.emplace("q8-trivial", value_model("Q8", {"1", "-1"}, {{"1", one}, {"-1", one}}));
  m.emplace("q8-nontrivial", char_model("Q8", {"1", "-1"}, "-1", minus));
  m.emplace("intro-diagram", char_model("Q8", {"1", "-1"}, "-1", minus));
  m.emplace("z4-z2-trivial",
            value_model("Z4", {"e", "g^2"}, {{"e", one}, {"g^2", one}}));
  m.emplace("z4-over-z2", char_model("Z4", {"e", "g^2"}, "g^2", minus));
  m.emplace("s3-z3-trivial", value_model("S3", {"e", "r^1", "r^2"},
                                         {{"e", one}, {"r^1", one}, {"r^2", one}}));
  m.emplace("s3-z3-omega", char_model("S3", {"e", "r^1", "r^2"}, "r^1", omega));
  m.emplace("d4-z4-i", char_model("D4", {"e", "r^1", "r^2", "r^3"}, "r^1", i));
  m.emplace("d4-z4-sign", char_model("D4", {"e", "r^1", "r^2", "r^3"}, "r^1", minus));
  m.emplace("d4-center-sign", char_model("D4", {"e", "r^2"}, "r^2", minus));
  m.emplace("v4-z2-sign",
            char_model("V4", {"(e,e)", "(g,e)"}, "(g,e)", minus));
  m.emplace("z6-z3-omega", char_model("Z6", {"e", "g^2", "g^4"}, "g^2", omega));
  m.emplace("s4-v4-chi",
            value_model("S4", {"(0123)", "(1032)", "(2301)", "(3210)"},
                        {{"(0123)", one}, {"(1032)", one}, {"(2301)", minus},
                         {"(3210)", minus}}));
  return m;
}

const std::vector<std::string> kFrobeniusSuite = {
    "q8-trivial",   "q8-nontrivial", "z4-z2-trivial", "z4-over-z2",
    "s3-z3-trivial", "s3-z3-omega",   "d4-z4-i",       "d4-z4-sign",
    "d4-center-sign", "v4-z2-sign",   "z6-z3-omega",   "s4-v4-chi"};

const std::vector<std::string> kG2Suite = {
    "q8-trivial", "q8-nontrivial", "s3-z3-omega", "d4-z4-i",
    "z4-over-z2", "d4-z4-sign",    "s4-v4-chi"};

} // namespace

MatrixRep fixture_rep(const std::string& name) {
  auto models = build_models();
  auto it = models.find(name);
  if (it == models.end()) fail(errc::input_error, "unknown fixture '" + name + "'");
  return it->second;
}

std::vector<RepModel> frobenius_suite() {
  std::vector<RepModel> out;
  for (const auto& name : kFrobeniusSuite) out.push_back({name, fixture_rep(name)});
  return out;
}

std::vector<RepModel> g2_suite() {
  std::vector<RepModel> out;
  for (const auto& name : kG2Suite) out.push_back({name, fixture_rep(name)});
  return out;
}

TensorParams tensor_fixture() {
  return TensorParams{Scalar(mpq_class(1, 3)), Scalar(mpq_class(1, 5)), 1, 1, 8};
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& name : kFrobeniusSuite) names.push_back(name);
  names.push_back("intro-diagram");
  names.push_back("tensor");
  names.push_back("so44-all");
  names.push_back("frobenius-suite");
  names.push_back("g2-suite");
  std::sort(names.begin(), names.end());
  return names;
}

Json fixture_json(const std::string& name) {
  Json j;
  j["name"] = name;
  j["version"] = 1;
  if (name == "tensor") {
    TensorParams p = tensor_fixture();
    j["lambda1"] = p.lambda1.rational()->get_str();
    j["lambda2"] = p.lambda2.rational()->get_str();
    j["parity1"] = p.parity1;
    j["parity2"] = p.parity2;
    j["window"] = p.window;
    return j;
  }
  if (name == "so44-all") {
    j["maps"] = Json::array({"x12", "x34", "swap", "cartan", "phi1234"});
    return j;
  }
  if (name == "frobenius-suite" || name == "g2-suite") {
    auto suite = name == "frobenius-suite" ? frobenius_suite() : g2_suite();
    Json models = Json::array();
    for (const auto& model : suite) {
      Json e;
      e["name"] = model.name;
      e["rep"] = rep_to_json(model.rep);
      models.push_back(std::move(e));
    }
    j["models"] = std::move(models);
    return j;
  }
  j["rep"] = rep_to_json(fixture_rep(name));
  return j;
}

} // namespace repkit
