#include "monoclosure/json_io.hpp"

#include <string>

#include "monoclosure/text_io.hpp"

namespace monoclosure {

namespace {

Exponent exponent_value(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return v.get<Exponent>();
  if (v.is_number_integer()) {
    auto x = v.get<std::int64_t>();
    if (x < 0) throw InputError("exponents must be nonnegative");
    return static_cast<Exponent>(x);
  }
  throw InputError("exponent must be a nonnegative integer");
}

std::size_t index_value(const nlohmann::json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError(std::string("malformed ") + what + ": '" + s + "'");
    }
    return std::stoul(s);
  }
  throw InputError(std::string("malformed ") + what);
}

Rational rational_value(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  throw InputError("rational must be a string \"p/q\" or an integer");
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json exponent_to_json(const ExponentVector& a) {
  Json j = Json::array();
  for (Exponent e : a) j.push_back(e);
  return j;
}

ExponentVector exponent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("exponent vector must be a JSON array");
  std::vector<Exponent> e;
  for (const auto& v : j) e.push_back(exponent_value(v));
  return ExponentVector(std::move(e));
}

Json ideal_to_json(const MonomialIdeal& I) {
  Json j;
  j["vars"] = I.vars();
  Json gens = Json::array();
  for (const auto& g : I.generators()) gens.push_back(exponent_to_json(g));
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) {
    throw InputError("ideal JSON needs \"vars\" and \"gens\"");
  }
  if (!j["vars"].is_array() || !j["gens"].is_array()) {
    throw InputError("ideal JSON fields \"vars\" and \"gens\" must be arrays");
  }
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : j["gens"]) gens.push_back(exponent_from_json(g));
  return make_ideal(std::move(vars), std::move(gens));
}

Json facet_to_json(const Facet& f) {
  Json j;
  Json w = Json::array();
  for (const auto& x : f.w.values()) w.push_back(x.get_si());
  j["w"] = std::move(w);
  j["c"] = to_string(f.c);
  return j;
}

Json newton_to_json(const NewtonPolyhedron& np) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : np.vpoints()) pts.push_back(exponent_to_json(p));
  j["vpoints"] = std::move(pts);
  Json fs = Json::array();
  for (const auto& f : np.facets()) fs.push_back(facet_to_json(f));
  j["facets"] = std::move(fs);
  return j;
}

Json ring_element_to_json(const AxesRingElement& e) {
  Json j = Json::array();
  j.push_back(Json::array({"const", to_string(e.constant_term())}));
  for (std::size_t b = 0; b < e.spec().branches; ++b) {
    Json terms = Json::array();
    for (std::size_t k = 1; k < e.spec().truncation; ++k) {
      const Rational& c = e.coefficient(b, k);
      if (c != 0) terms.push_back(Json::array({std::to_string(k), to_string(c)}));
    }
    j.push_back(Json::array({"t" + std::to_string(b + 1), std::move(terms)}));
  }
  return j;
}

AxesRingElement ring_element_from_json(const nlohmann::json& j, GluedRingSpec spec) {
  if (!j.is_array()) throw InputError("ring element must be a JSON array");
  AxesRingElement e(spec);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string()) {
      throw InputError("ring element entries must be [label, value] pairs");
    }
    const std::string label = entry[0].get<std::string>();
    if (label == "const") {
      e.set_constant(rational_value(entry[1]));
      continue;
    }
    if (label.size() < 2 || label[0] != 't') throw InputError("unknown ring element label '" + label + "'");
    std::size_t branch = index_value(nlohmann::json(label.substr(1)), "branch label");
    if (branch == 0 || branch > spec.branches) throw InputError("branch label out of range: " + label);
    if (!entry[1].is_array()) throw InputError("branch terms must be an array");
    for (const auto& term : entry[1]) {
      if (!term.is_array() || term.size() != 2) throw InputError("branch terms must be [degree, coeff]");
      std::size_t degree = index_value(term[0], "degree");
      if (degree == 0 || degree >= spec.truncation) {
        throw InputError("term degree " + std::to_string(degree) + " outside 1..N-1");
      }
      e.set_coefficient(branch - 1, degree, rational_value(term[1]));
    }
  }
  return e;
}

Json certificate_to_json(const ExclusionCertificate& c) {
  Json j;
  j["ideal"] = ideal_to_json(c.ideal);
  j["element"] = exponent_to_json(c.element);
  j["branches"] = c.ring.branches;
  j["truncation"] = c.ring.truncation;
  Json images = Json::array();
  for (const auto& img : c.images) images.push_back(ring_element_to_json(img));
  j["images"] = std::move(images);
  return j;
}

ExclusionCertificate certificate_from_json(const nlohmann::json& j) {
  for (const char* key : {"ideal", "element", "branches", "truncation", "images"}) {
    if (!j.is_object() || !j.contains(key)) {
      throw InputError(std::string("certificate JSON is missing \"") + key + "\"");
    }
  }
  ExclusionCertificate c;
  c.ideal = ideal_from_json(j["ideal"]);
  c.element = exponent_from_json(j["element"]);
  c.ring = GluedRingSpec{index_value(j["branches"], "branch count"),
                         index_value(j["truncation"], "truncation")};
  if (c.ring.branches == 0 || c.ring.truncation == 0) throw InputError("empty glued ring");
  if (!j["images"].is_array()) throw InputError("\"images\" must be an array");
  for (const auto& img : j["images"]) c.images.push_back(ring_element_from_json(img, c.ring));
  return c;
}

Json decomposition_to_json(const StructureDecomposition& d, const std::vector<std::string>& vars) {
  Json j;
  j["box_degree"] = d.box_degree;
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json block;
    Json names = Json::array();
    for (auto i : b.vars) names.push_back(vars[i]);
    block["vars"] = std::move(names);
    block["mu"] = format_monomial(b.mu, b.component.vars());
    block["ideal"] = ideal_to_json(b.component);
    blocks.push_back(std::move(block));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

}  // namespace monoclosure
