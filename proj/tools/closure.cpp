// closure: command-line front end to the monoclosure library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoclosure/certificate.hpp"
#include "monoclosure/closures.hpp"
#include "monoclosure/json_io.hpp"
#include "monoclosure/oracles.hpp"
#include "monoclosure/polyhedra.hpp"
#include "monoclosure/reproduce.hpp"
#include "monoclosure/selftest.hpp"
#include "monoclosure/structure.hpp"
#include "monoclosure/text_io.hpp"

using namespace monoclosure;

namespace {

constexpr int kNo = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string ideal_text;
  std::string in_path;
  std::string vars_csv;
  std::string element;
  std::string format = "json";
  bool explain = false;
  std::uint64_t seed = 42;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::vector<std::string>> given_vars(const Options& o) {
  if (o.vars_csv.empty()) return std::nullopt;
  return split_names(o.vars_csv);
}

MonomialIdeal load_ideal(const Options& o, const std::string& text, const std::string& path) {
  if (!text.empty() && !path.empty()) throw InputError("give either an ideal text or an input file");
  if (!path.empty()) return ideal_from_json(parse_json_text(read_input(path)));
  if (text.empty()) throw InputError("missing ideal (--ideal or --in)");
  auto vars = given_vars(o);
  if (!vars) {
    // Element variables not occurring in the ideal join the ambient ring.
    std::vector<std::string> names = variables_in(text);
    for (const auto& v : variables_in(o.element)) {
      if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(v);
    }
    vars = names;
  }
  return parse_ideal(text, vars);
}

MonomialIdeal load_ideal(const Options& o) { return load_ideal(o, o.ideal_text, o.in_path); }

ExponentVector load_element(const Options& o, const MonomialIdeal& I) {
  if (o.element.empty()) throw InputError("missing --element");
  return parse_monomial(o.element, I.vars());
}

std::uint64_t effective_seed(const Options& o) {
  if (const char* env = std::getenv("CLOSURE_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t s = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
      return s;
    } catch (const std::exception&) {
      throw InputError(std::string("CLOSURE_SEED is not an unsigned integer: ") + env);
    }
  }
  return o.seed;
}

bool text_output(const Options& o) { return o.format == "text"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (text_output(o)) {
    std::cout << text << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

Json facets_json(const MonomialIdeal& I) {
  Json out = Json::array();
  if (I.is_zero()) return out;
  for (const auto& f : facets(newton_polyhedron(I))) out.push_back(facet_to_json(f));
  return out;
}

// Witnesses behind the generators that the closure added to I.
Json inner_witnesses(const MonomialIdeal& I, const MonomialIdeal& closure) {
  Json out = Json::array();
  if (I.is_zero()) return out;
  const NewtonPolyhedron np = newton_polyhedron(I);
  for (const auto& g : closure.generators()) {
    if (contains(I, g)) continue;
    Json w;
    w["monomial"] = format_monomial(g, I.vars());
    const auto scale = lp_max_scale(g, I.generators(), I.generators());
    w["lp_scale"] = scale ? to_string(*scale) : "infeasible";
    Json slack = Json::array();
    for (const auto& f : facets(np)) {
      Json s = facet_to_json(f);
      s["value"] = to_string(f.w.value(g));
      slack.push_back(std::move(s));
    }
    w["facets"] = std::move(slack);
    out.push_back(std::move(w));
  }
  return out;
}

int run_closure(const Options& o, const std::string& verb, const std::string& J_text) {
  const MonomialIdeal I = load_ideal(o);
  MonomialIdeal result = I;
  Json extra;
  if (verb == "natural") {
    result = natural_closure(I);
  } else if (verb == "integral") {
    result = integral_closure(I);
  } else if (verb == "inner") {
    result = inner_integral_closure(I);
  } else if (verb == "special") {
    if (J_text.empty()) throw InputError("missing --J");
    const MonomialIdeal J = parse_ideal(J_text, I.vars());
    result = special_part(I, J);
  } else if (verb == "continuous") {
    const ContinuousClosure cc = continuous_closure_monomial(I);
    result = cc.ideal;
    extra["field_semantics"] = cc.field_semantics;
    extra["justification"] = cc.justification;
  } else if (verb == "axes-bounds") {
    LowerBoundTrace trace;
    result = axes_lower_bound(I, &trace);
    extra["upper_bound"] = ideal_to_json(integral_closure(I));
    extra["iterations"] = trace.iterations;
    if (o.explain) {
      Json contributions = Json::array();
      for (const auto& [prime, contribution] : trace.contributions) {
        Json c;
        c["prime"] = format_ideal(prime);
        c["contribution"] = format_ideal(contribution);
        contributions.push_back(std::move(c));
      }
      extra["contributions"] = std::move(contributions);
    }
  }
  Json j;
  j["input"] = ideal_to_json(I);
  j["result"] = ideal_to_json(result);
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (o.explain) {
    j["facets"] = facets_json(I);
    if (verb == "natural" || verb == "inner" || verb == "continuous") {
      j["witnesses"] = inner_witnesses(I, result);
    }
  }
  std::string text = format_ideal(result);
  if (verb == "axes-bounds") text += " <= I^ax <= " + format_ideal(integral_closure(I));
  emit(o, j, text);
  return 0;
}

CertifyConfig certify_config(const Options& o, const std::vector<std::size_t>& branches,
                             const std::vector<std::size_t>& truncations, std::size_t budget,
                             std::size_t workers) {
  CertifyConfig config;
  config.branch_counts = branches;
  if (!truncations.empty()) config.truncations = truncations;
  config.budget = budget;
  config.workers = workers;
  config.seed = effective_seed(o);
  return config;
}

void write_certificate(const ExclusionCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << certificate_to_json(cert).dump(2) << "\n";
}

int run_membership(const Options& o, const std::string& closure, const CertifyConfig& config,
                   const std::string& cert_out) {
  const MonomialIdeal I = load_ideal(o);
  const ExponentVector m = load_element(o, I);
  Json j;
  j["ideal"] = ideal_to_json(I);
  j["element"] = format_monomial(m, I.vars());
  j["closure"] = closure;
  if (closure == "axes") {
    const AxesMembershipVerdict v = axes_membership(I, m, config);
    j["verdict"] = to_string(v.kind);
    if (v.certificate) {
      j["certificate"] = certificate_to_json(*v.certificate);
      if (!cert_out.empty()) {
        write_certificate(*v.certificate, cert_out);
        j["certificate_path"] = cert_out;
      }
    }
    emit(o, j, to_string(v.kind));
    const bool excluded = v.kind == AxesMembershipVerdict::Kind::OutCertified ||
                          v.kind == AxesMembershipVerdict::Kind::OutsideIntegralClosure;
    return excluded ? kNo : 0;
  }
  MonomialIdeal target;
  if (closure == "natural") target = natural_closure(I);
  else if (closure == "integral") target = integral_closure(I);
  else if (closure == "inner") target = inner_integral_closure(I);
  else if (closure == "continuous") target = continuous_closure_monomial(I).ideal;
  else if (closure == "axes-lower") target = axes_lower_bound(I);
  else if (closure == "ideal") target = I;
  else throw InputError("unknown closure '" + closure + "'");
  const bool member = contains(target, m);
  j["member"] = member;
  if (o.explain) j["closure_ideal"] = ideal_to_json(target);
  emit(o, j, std::string(member ? "member" : "not a member"));
  return member ? 0 : kNo;
}

int run_certify(const Options& o, const CertifyConfig& config, const std::string& out_path) {
  const MonomialIdeal I = load_ideal(o);
  const ExponentVector m = load_element(o, I);
  const auto cert = certify_exclusion(I, m, config);
  Json j;
  if (cert) {
    j = certificate_to_json(*cert);
    if (!out_path.empty()) write_certificate(*cert, out_path);
  } else {
    j["certificate"] = nullptr;
  }
  emit(o, j, cert ? certificate_to_json(*cert).dump() : std::string("no certificate found"));
  return cert ? 0 : kNo;
}

int run_verify(const Options& o) {
  if (o.in_path.empty()) throw InputError("missing --in certificate file");
  const ExclusionCertificate cert = certificate_from_json(parse_json_text(read_input(o.in_path)));
  const VerificationResult r = verify_certificate(cert);
  Json j;
  j["verified"] = r.verified;
  j["diagnostic"] = r.diagnostic;
  emit(o, j, r.verified ? "verified" : "rejected: " + r.diagnostic);
  return r.verified ? 0 : kNo;
}

int run_newton(const Options& o, bool with_facets) {
  const MonomialIdeal I = load_ideal(o);
  if (I.is_zero()) throw InputError("the zero ideal has no Newton polyhedron");
  const NewtonPolyhedron np = newton_polyhedron(I);
  Json j = newton_to_json(np);
  if (!with_facets) j.erase("facets");
  std::ostringstream text;
  for (const auto& f : np.facets()) {
    text << "w = (";
    for (std::size_t i = 0; i < f.w.size(); ++i) text << (i ? ", " : "") << f.w[i];
    text << "), c = " << to_string(f.c) << "\n";
  }
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  emit(o, j, t);
  return 0;
}

int run_oracle(const Options& o, const std::string& kind, unsigned bound) {
  const MonomialIdeal I = load_ideal(o);
  const ExponentVector a = load_element(o, I);
  const OracleAnswer ans = kind == "inner" ? inner_oracle(a, I, bound) : integral_oracle(a, I, bound);
  Json j;
  j["kind"] = kind;
  j["element"] = format_monomial(a, I.vars());
  j["yes"] = ans.yes;
  j["n"] = ans.n;
  j["answer"] = to_string(ans);
  emit(o, j, to_string(ans));
  return ans.yes ? 0 : kNo;
}

int run_structure(const Options& o, const std::string& mu_text, unsigned box) {
  if (mu_text.empty()) throw InputError("missing --mu");
  std::vector<std::string> vars;
  MonomialIdeal A;
  const bool given = !o.ideal_text.empty() || !o.in_path.empty();
  if (given) {
    Options o2 = o;
    o2.element = mu_text;
    A = load_ideal(o2);
    vars = A.vars();
  } else {
    vars = given_vars(o).value_or(variables_in(mu_text));
  }
  const ExponentVector mu = parse_monomial(mu_text, vars);
  if (!given) A = maximal_naturally_closed_excluding(vars, mu, box);
  const DecompositionReport report = verify_decomposition(A, mu, box);
  Json j;
  j["ideal"] = ideal_to_json(A);
  j["mu"] = format_monomial(mu, vars);
  j["box_degree"] = box;
  j["verified"] = report.ok();
  if (report.ok()) {
    j["decomposition"] = decomposition_to_json(*report.decomposition, vars);
  } else {
    j["failure"] = report.failure;
  }
  std::string text = format_ideal(A);
  if (!report.ok()) text += "\nverification failed: " + report.failure;
  emit(o, j, text);
  return report.ok() ? 0 : kNo;
}

int run_fiber(const Options& o, const std::string& f_text, const std::string& g_text,
              const std::string& fiber_text, const std::string& J_text, const std::string& fiber_vars_csv) {
  if (f_text.empty() || g_text.empty() || fiber_text.empty() || J_text.empty() || fiber_vars_csv.empty()) {
    throw InputError("fiber needs --f, --g, --fiber-ideal, --J and --fiber-vars");
  }
  std::vector<std::string> vars;
  if (auto given = given_vars(o)) {
    vars = *given;
  } else {
    for (const auto& t : {fiber_vars_csv, fiber_text, g_text, J_text, f_text}) {
      const auto names = t == fiber_vars_csv ? split_names(t) : variables_in(t);
      for (const auto& v : names) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
    }
  }
  std::vector<std::size_t> fiber_idx;
  for (const auto& name : split_names(fiber_vars_csv)) {
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InputError("unknown fiber variable '" + name + "'");
    fiber_idx.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  std::sort(fiber_idx.begin(), fiber_idx.end());
  const ExponentVector f = parse_monomial(f_text, vars);
  const ExponentVector g = parse_monomial(g_text, vars);
  const MonomialIdeal fiber = parse_ideal(fiber_text, vars);
  const MonomialIdeal J = parse_ideal(J_text, vars);
  const bool certified = fiber_exclusion_monomial(f, g, fiber, J, fiber_idx);
  Json j;
  j["certified"] = certified;
  j["excluded_element"] = format_monomial(f + g, vars);
  j["ideal"] = ideal_to_json(sum(fiber, multiply(J, g)));
  emit(o, j, certified ? format_monomial(f + g, vars) + " is not in the continuous closure" : "no conclusion");
  return certified ? 0 : kNo;
}

int run_reproduce(const Options& o, const std::string& name) {
  const ReproduceReport r = reproduce(name);
  std::string text;
  if (name == "counterexample") {
    const bool lower = r.actual["element_in_axes_lower_bound"].get<bool>();
    const bool cont = r.actual["element_in_continuous_closure"].get<bool>();
    text = std::string("uvx ") + (lower ? "∈" : "∉") + " axes lower bound; uvx " + (cont ? "∈" : "∉") +
           " continuous closure (= natural closure)";
  } else if (name == "fiber-criterion") {
    text = r.actual["certified"].get<bool>() ? "certified: xuv ∉ (u^2, v^2, x^2*u*v)^cont" : "no conclusion";
  } else {
    text = r.actual.dump();
  }
  Json j;
  j["name"] = name;
  j["matches"] = r.matches;
  j["result"] = r.actual;
  emit(o, j, text);
  if (!r.matches) {
    std::cerr << "reproduction differs from the stored expectation:\n" << r.delta << "\n";
    return kNo;
  }
  return 0;
}

int run_selftest_verb(const Options& o, unsigned budget_ms, std::size_t max_instances) {
  const SelftestReport r = run_selftest(effective_seed(o), std::chrono::milliseconds(budget_ms), max_instances);
  Json j;
  j["instances"] = r.instances;
  j["checks"] = r.checks;
  j["budget_exhausted"] = r.budget_exhausted;
  j["failures"] = r.failures;
  std::ostringstream text;
  text << r.instances << " instances, " << r.checks << " checks, " << r.failures.size() << " failures";
  for (const auto& f : r.failures) text << "\n  " << f;
  emit(o, j, text.str());
  return r.failures.empty() ? 0 : kNo;
}

void add_ideal_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--ideal", o.ideal_text, "ideal text, e.g. '(x^2,y^2)'");
  cmd->add_option("--in", o.in_path, "JSON input file ('-' for stdin)");
  cmd->add_option("--vars", o.vars_csv, "comma-separated variable order");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure operations on monomial ideals"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--explain", o.explain, "include witnesses");
  app.add_option("--seed", o.seed, "random seed (CLOSURE_SEED overrides)");

  std::string J_text;
  std::vector<CLI::App*> closure_cmds;
  for (const char* verb : {"natural", "integral", "inner", "special", "continuous", "axes-bounds"}) {
    CLI::App* cmd = app.add_subcommand(verb, std::string(verb) + " closure of an ideal");
    add_ideal_options(cmd, o);
    if (std::string(verb) == "special") cmd->add_option("--J", J_text, "ideal J")->required();
    closure_cmds.push_back(cmd);
  }

  std::string closure_kind = "natural";
  std::string cert_out;
  std::vector<std::size_t> branches;
  std::vector<std::size_t> truncations;
  std::size_t budget = 10000;
  std::size_t workers = 1;
  auto add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("--branches", branches, "branch counts to try");
    cmd->add_option("--truncation", truncations, "truncation levels to try");
    cmd->add_option("--budget", budget, "candidate maps per ring");
    cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* membership = app.add_subcommand("membership", "membership of a monomial in a closure");
  add_ideal_options(membership, o);
  membership->add_option("--element", o.element)->required();
  membership->add_option("--closure", closure_kind)
      ->check(CLI::IsMember({"ideal", "natural", "integral", "inner", "continuous", "axes-lower", "axes"}));
  membership->add_option("--certificate-out", cert_out, "write the exclusion certificate here");
  add_search_options(membership);

  CLI::App* certify = app.add_subcommand("certify", "search for an axes-closure exclusion certificate");
  add_ideal_options(certify, o);
  certify->add_option("--element", o.element)->required();
  certify->add_option("--out", cert_out, "write the certificate here");
  add_search_options(certify);

  CLI::App* verify = app.add_subcommand("verify-cert", "re-verify a certificate");
  verify->add_option("--in", o.in_path, "certificate JSON")->required();

  bool with_facets = false;
  CLI::App* newton = app.add_subcommand("newton", "Newton polyhedron");
  add_ideal_options(newton, o);
  newton->add_flag("--facets", with_facets, "list the facets");

  std::string oracle_kind;
  unsigned bound = kDefaultOracleBound;
  CLI::App* oracle = app.add_subcommand("oracle", "bounded power-membership search");
  oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"inner", "integral"}));
  add_ideal_options(oracle, o);
  oracle->add_option("--element", o.element)->required();
  oracle->add_option("--bound", bound)->check(CLI::PositiveNumber);

  std::string mu_text;
  unsigned box = 6;
  CLI::App* structure = app.add_subcommand("structure", "naturally closed ideals maximal excluding a monomial");
  add_ideal_options(structure, o);
  structure->add_option("--mu", mu_text)->required();
  structure->add_option("--box", box, "degree box for maximality")->check(CLI::Range(0u, 40u));

  std::string f_text, g_text, fiber_text, fiber_vars;
  CLI::App* fiber = app.add_subcommand("fiber", "monomial fiber criterion");
  fiber->add_option("--f", f_text)->required();
  fiber->add_option("--g", g_text)->required();
  fiber->add_option("--fiber-ideal", fiber_text)->required();
  fiber->add_option("--J", J_text)->required();
  fiber->add_option("--fiber-vars", fiber_vars)->required();
  fiber->add_option("--vars", o.vars_csv);

  std::string reproduce_name;
  CLI::App* repro = app.add_subcommand("reproduce", "run a stored reproduction");
  repro->add_option("name", reproduce_name)->required()->check(CLI::IsMember(reproduce_names()));

  unsigned budget_ms = 30000;
  std::size_t max_instances = 1000;
  CLI::App* selftest = app.add_subcommand("selftest", "randomized property suite");
  selftest->add_option("--budget-ms", budget_ms, "time budget in milliseconds");
  selftest->add_option("--max-instances", max_instances);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    for (CLI::App* cmd : closure_cmds) {
      if (cmd->parsed()) return run_closure(o, cmd->get_name(), J_text);
    }
    if (membership->parsed() || certify->parsed()) {
      const CertifyConfig config = certify_config(o, branches, truncations, budget, workers);
      return membership->parsed() ? run_membership(o, closure_kind, config, cert_out)
                                  : run_certify(o, config, cert_out);
    }
    if (verify->parsed()) return run_verify(o);
    if (newton->parsed()) return run_newton(o, with_facets);
    if (oracle->parsed()) return run_oracle(o, oracle_kind, bound);
    if (structure->parsed()) return run_structure(o, mu_text, box);
    if (fiber->parsed()) return run_fiber(o, f_text, g_text, fiber_text, J_text, fiber_vars);
    if (repro->parsed()) return run_reproduce(o, reproduce_name);
    if (selftest->parsed()) return run_selftest_verb(o, budget_ms, max_instances);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
