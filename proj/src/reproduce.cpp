#include "monoclosure/reproduce.hpp"

#include <algorithm>

#include "monoclosure/closures.hpp"
#include "monoclosure/text_io.hpp"

namespace monoclosure {

namespace {

const char* const kCounterexample = R"json({
  "ideal": "(v^2, u*v*x^2, u^2)",
  "element": "u*v*x",
  "integral_closure": "(v^2, u*v, u^2)",
  "natural_closure": "(v^2, u*v*x^2, u^2)",
  "continuous_closure": "(v^2, u*v*x^2, u^2)",
  "axes_lower_bound": "(v^2, u*v*x, u^2)",
  "element_in_natural_closure": false,
  "element_in_continuous_closure": false,
  "element_in_axes_lower_bound": true,
  "uv_in_integral_closure": true,
  "axes_verdict": "InLowerBound"
})json";

const char* const kFiberCriterion = R"json({
  "f": "x",
  "g": "u*v",
  "fiber_vars": ["u", "v"],
  "fiber_ideal": "(v^2, u^2)",
  "J": "(x^2)",
  "f_in_natural_closure_of_J": false,
  "g_in_natural_closure_of_fiber_ideal": false,
  "certified": true,
  "excluded_element": "u*v*x",
  "ideal": "(v^2, u*v*x^2, u^2)"
})json";

const char* const kHighDegree = R"json({
  "cases": [
    {"ideal": "(y^3, x*y, x^3)", "weights": [1, 1], "degree_bound": 4, "checked": 18, "all_in_natural_closure": true},
    {"ideal": "(z^2, y^3, x*y*z, x^2)", "weights": [1, 1, 1], "degree_bound": 4, "checked": 64, "all_in_natural_closure": true},
    {"ideal": "(y^2, x^4)", "weights": [1, 2], "degree_bound": 5, "checked": 11, "all_in_natural_closure": true},
    {"ideal": "(z, y^2, x^3)", "weights": [1, 2, 3], "degree_bound": 5, "checked": 20, "all_in_natural_closure": true}
  ]
})json";

const char* const kPrimaryEquality = R"json({
  "cases": [
    {"ideal": "(y^2, x^2)", "natural_closure": "(y^2, x^2)", "axes_lower_bound": "(y^2, x^2)", "equal": true},
    {"ideal": "(y^2, x^3)", "natural_closure": "(y^2, x^2*y, x^3)", "axes_lower_bound": "(y^2, x^2*y, x^3)", "equal": true},
    {"ideal": "(z^2, y^2, x^2)", "natural_closure": "(z^2, y^2, x*y*z, x^2)", "axes_lower_bound": "(z^2, y^2, x*y*z, x^2)", "equal": true},
    {"ideal": "(y^2, x^2)", "natural_closure": "(y^2, x^2)", "axes_lower_bound": "(y^2, x^2)", "equal": true}
  ]
})json";

Json counterexample() {
  const std::vector<std::string> vars{"u", "v", "x"};
  MonomialIdeal I = parse_ideal("(u^2, v^2, u*v*x^2)", vars);
  ExponentVector uvx = parse_monomial("u*v*x", vars);
  ExponentVector uv = parse_monomial("u*v", vars);
  MonomialIdeal natural = natural_closure(I);
  MonomialIdeal continuous = continuous_closure_monomial(I).ideal;
  MonomialIdeal lower = axes_lower_bound(I);
  MonomialIdeal closure = integral_closure(I);
  Json j;
  j["ideal"] = format_ideal(I);
  j["element"] = format_monomial(uvx, vars);
  j["integral_closure"] = format_ideal(closure);
  j["natural_closure"] = format_ideal(natural);
  j["continuous_closure"] = format_ideal(continuous);
  j["axes_lower_bound"] = format_ideal(lower);
  j["element_in_natural_closure"] = contains(natural, uvx);
  j["element_in_continuous_closure"] = contains(continuous, uvx);
  j["element_in_axes_lower_bound"] = contains(lower, uvx);
  j["uv_in_integral_closure"] = contains(closure, uv);
  j["axes_verdict"] = to_string(axes_membership(I, uvx).kind);
  return j;
}

Json fiber_criterion() {
  const std::vector<std::string> vars{"u", "v", "x"};
  ExponentVector f = parse_monomial("x", vars);
  ExponentVector g = parse_monomial("u*v", vars);
  MonomialIdeal fiber = parse_ideal("(u^2, v^2)", vars);
  MonomialIdeal J = parse_ideal("(x^2)", vars);
  std::vector<std::size_t> fiber_vars{0, 1};
  MonomialIdeal fiber_sub = restrict_to(fiber, fiber_vars);
  Json j;
  j["f"] = format_monomial(f, vars);
  j["g"] = format_monomial(g, vars);
  j["fiber_vars"] = std::vector<std::string>{"u", "v"};
  j["fiber_ideal"] = format_ideal(fiber);
  j["J"] = format_ideal(J);
  j["f_in_natural_closure_of_J"] = contains(natural_closure(J), f);
  j["g_in_natural_closure_of_fiber_ideal"] =
      contains(natural_closure(fiber_sub), restrict_to(g, fiber_vars));
  j["certified"] = fiber_exclusion_monomial(f, g, fiber, J, fiber_vars);
  j["excluded_element"] = format_monomial(f + g, vars);
  j["ideal"] = format_ideal(sum(fiber, multiply(J, g)));
  return j;
}

Json high_degree() {
  struct Case {
    const char* ideal;
    std::vector<Exponent> weights;
    Exponent d;
  };
  const std::vector<Case> cases{
      {"(x^3, y^3, x*y)", {1, 1}, 4},
      {"(x^2, y^3, z^2, x*y*z)", {1, 1, 1}, 4},
      {"(x^4, y^2)", {1, 2}, 5},
      {"(x^3, y^2, z)", {1, 2, 3}, 5},
  };
  Json out = Json::array();
  for (const auto& c : cases) {
    MonomialIdeal I = parse_ideal(c.ideal);
    MonomialIdeal natural = natural_closure(I);
    const std::size_t n = I.num_vars();
    std::size_t checked = 0;
    bool all_in = true;
    ExponentVector box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = (c.d + 2) / c.weights[i];
    for_each_in_box(box, [&](const ExponentVector& a) {
      Exponent wdeg = 0;
      for (std::size_t i = 0; i < n; ++i) wdeg += c.weights[i] * a[i];
      if (wdeg < c.d || wdeg > c.d + 2) return;
      ++checked;
      if (!contains(natural, a)) all_in = false;
    });
    Json j;
    j["ideal"] = format_ideal(I);
    j["weights"] = c.weights;
    j["degree_bound"] = c.d;
    j["checked"] = checked;
    j["all_in_natural_closure"] = all_in;
    out.push_back(std::move(j));
  }
  Json j;
  j["cases"] = std::move(out);
  return j;
}

Json primary_equality() {
  const std::vector<std::pair<const char*, std::vector<std::string>>> cases{
      {"(x^2, y^2)", {"x", "y"}},
      {"(x^3, y^2)", {"x", "y"}},
      {"(x^2, y^2, z^2)", {"x", "y", "z"}},
      {"(x^2, y^2)", {"x", "y", "z"}},
  };
  Json out = Json::array();
  for (const auto& [text, vars] : cases) {
    MonomialIdeal I = parse_ideal(text, vars);
    MonomialIdeal natural = natural_closure(I);
    MonomialIdeal lower = axes_lower_bound(I);
    Json j;
    j["ideal"] = format_ideal(I);
    j["natural_closure"] = format_ideal(natural);
    j["axes_lower_bound"] = format_ideal(lower);
    j["equal"] = natural == lower;
    out.push_back(std::move(j));
  }
  Json j;
  j["cases"] = std::move(out);
  return j;
}

}  // namespace

const std::vector<std::string>& reproduce_names() {
  static const std::vector<std::string> names{"counterexample", "fiber-criterion", "high-degree",
                                              "primary-equality"};
  return names;
}

ReproduceReport reproduce(const std::string& name) {
  ReproduceReport r;
  r.name = name;
  const char* expected = nullptr;
  if (name == "counterexample") {
    r.actual = counterexample();
    expected = kCounterexample;
  } else if (name == "fiber-criterion") {
    r.actual = fiber_criterion();
    expected = kFiberCriterion;
  } else if (name == "high-degree") {
    r.actual = high_degree();
    expected = kHighDegree;
  } else if (name == "primary-equality") {
    r.actual = primary_equality();
    expected = kPrimaryEquality;
  } else {
    throw InputError("unknown reproduction '" + name + "'");
  }
  r.expected = Json::parse(expected);
  r.matches = r.actual == r.expected;
  if (!r.matches) {
    r.delta = nlohmann::json::diff(nlohmann::json(r.expected), nlohmann::json(r.actual)).dump(2);
  }
  return r;
}

}  // namespace monoclosure
