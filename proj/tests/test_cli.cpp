#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "monoclosure/certificate.hpp"
#include "monoclosure/closures.hpp"
#include "monoclosure/json_io.hpp"
#include "monoclosure/oracles.hpp"
#include "monoclosure/polyhedra.hpp"
#include "monoclosure/reproduce.hpp"
#include "monoclosure/structure.hpp"
#include "support.hpp"

using namespace monoclosure;
using testing::Gen;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CLOSURE_BIN + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_path(const std::string& name) { return "/tmp/closure_test_" + name; }

}  // namespace

TEST_CASE("cli: closure verbs agree with the library") {
  Gen g(91);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = g.uniform(1, 3);
    const auto I = g.ideal(n, 4, 4);
    const std::string arg = "--ideal " + quote(format_ideal(I)) + " --vars " + quote(
        [&] {
          std::string s;
          for (const auto& v : I.vars()) s += (s.empty() ? "" : ",") + v;
          return s;
        }());
    const std::vector<std::pair<std::string, MonomialIdeal>> expect{
        {"natural", natural_closure(I)},
        {"integral", integral_closure(I)},
        {"inner", inner_integral_closure(I)},
        {"continuous", continuous_closure_monomial(I).ideal},
        {"axes-bounds", axes_lower_bound(I)},
    };
    for (const auto& [verb, result] : expect) {
      const auto r = run(verb + " " + arg);
      CHECK(r.code == 0);
      CHECK(ideal_from_json(parsed(r)["result"]) == result);
    }
    const auto J = g.ideal(n, 2, 3);
    const auto r = run("special " + arg + " --J " + quote(format_ideal(J)));
    CHECK(r.code == 0);
    CHECK(ideal_from_json(parsed(r)["result"]) == special_part(I, J));
  }
}

TEST_CASE("cli: membership, oracle, newton, fiber, structure") {
  const auto I = parse_ideal("(u^2,v^2,u*v*x^2)");
  auto r = run("membership --ideal '(u^2,v^2,u*v*x^2)' --element u*v*x --closure natural");
  CHECK(r.code == 1);
  CHECK(parsed(r)["member"] == contains(natural_closure(I), {1, 1, 1}));
  r = run("membership --ideal '(u^2,v^2,u*v*x^2)' --element u*v*x --closure axes-lower");
  CHECK(r.code == 0);
  r = run("membership --ideal '(u^2,v^2,u*v*x^2)' --element u*v --closure integral");
  CHECK(r.code == 0);
  r = run("membership --ideal '(u^2,v^2,u*v*x^2)' --element u*v*x --closure axes");
  CHECK(r.code == 0);
  CHECK(parsed(r)["verdict"] == "InLowerBound");

  const std::string cert_path = temp_path("cert.json");
  r = run("membership --ideal '(x^2,y^2)' --element x*y --closure axes --certificate-out " + cert_path);
  CHECK(r.code == 1);
  CHECK(parsed(r)["verdict"] == "OutCertified");
  CHECK(parsed(r)["certificate_path"] == cert_path);
  r = run("verify-cert --in " + cert_path);
  CHECK(r.code == 0);
  CHECK(parsed(r)["verified"] == true);

  r = run("oracle inner --ideal '(x^2,y^2)' --element x^3 --bound 20");
  CHECK(r.code == 0);
  CHECK(parsed(r)["answer"] == to_string(inner_oracle({3, 0}, parse_ideal("(x^2,y^2)"))));
  r = run("oracle integral --ideal '(x^2,y^2)' --element x --bound 5");
  CHECK(r.code == 1);
  CHECK(parsed(r)["answer"] == "NoUpTo(5)");

  r = run("newton --ideal '(x^2,y^2)' --facets");
  CHECK(r.code == 0);
  CHECK(parsed(r).dump() == nlohmann::json(newton_to_json(newton_polyhedron(parse_ideal("(x^2,y^2)")))).dump());
  CHECK(parsed(r)["facets"][2].dump() == R"({"c":"2","w":[1,1]})");

  r = run("fiber --f x --g u*v --fiber-ideal '(u^2,v^2)' --J '(x^2)' --fiber-vars u,v");
  CHECK(r.code == 0);
  CHECK(parsed(r)["certified"] == true);
  r = run("fiber --f x --g u^2 --fiber-ideal '(u^2,v^2)' --J '(x^2)' --fiber-vars u,v");
  CHECK(r.code == 1);

  r = run("structure --mu x*y --box 6");
  CHECK(r.code == 0);
  const auto A = maximal_naturally_closed_excluding({"x", "y"}, {1, 1}, 6);
  CHECK(ideal_from_json(parsed(r)["ideal"]) == A);
  CHECK(parsed(r)["box_degree"] == 6);
  CHECK(parsed(r)["decomposition"].dump() ==
        nlohmann::json(decomposition_to_json(*verify_decomposition(A, {1, 1}, 6).decomposition, {"x", "y"})).dump());
  r = run("structure --ideal '(x^3,y^2)' --mu x*y --box 6");
  CHECK(r.code == 1);
}

TEST_CASE("cli: certify and verify through files") {
  const std::string in = temp_path("ideal.json");
  {
    std::ofstream f(in);
    f << R"({"vars": ["u","v"], "gens": [[2,0],[0,2]]})";
  }
  const std::string out = temp_path("certify.json");
  auto r = run("certify --in " + in + " --element u*v --seed 42 --truncation 4 --out " + out);
  CHECK(r.code == 0);
  CertifyConfig c;
  c.truncations = {4};
  const auto cert = certify_exclusion(parse_ideal("(u^2,v^2)", std::vector<std::string>{"u", "v"}), {1, 1}, c);
  REQUIRE(cert.has_value());
  CHECK(parsed(r).dump() == nlohmann::json(certificate_to_json(*cert)).dump());
  CHECK(run("verify-cert --in " + out).code == 0);

  // A tampered certificate is rejected with exit 1.
  auto j = parsed(r);
  j["images"][1] = j["images"][0];
  const std::string bad = temp_path("tampered.json");
  {
    std::ofstream f(bad);
    f << j.dump();
  }
  r = run("verify-cert --in " + bad);
  CHECK(r.code == 1);
  CHECK(parsed(r)["verified"] == false);

  r = run("certify --ideal '(u^2,v^2,u*v*x^2)' --element u*v*x --budget 500");
  CHECK(r.code == 1);
  CHECK(parsed(r)["certificate"].is_null());
}

TEST_CASE("cli: reproductions") {
  for (const auto& name : reproduce_names()) {
    const auto r = run("reproduce " + name);
    CHECK(r.code == 0);
    CHECK(parsed(r)["matches"] == true);
    CHECK(parsed(r)["result"].dump() == nlohmann::json(reproduce(name).actual).dump());
  }
  const auto t = run("--format text reproduce counterexample");
  CHECK(t.out == "uvx ∈ axes lower bound; uvx ∉ continuous closure (= natural closure)\n");
  CHECK(run("reproduce nothing").code == 2);
}

TEST_CASE("cli: input errors exit with 2") {
  CHECK(run("natural --ideal '(x^2,'").code == 2);
  CHECK(run("natural").code == 2);
  CHECK(run("membership --ideal '(x^2)' --vars x --element 'q' --closure natural").code == 2);
  CHECK(run("natural --in /nonexistent/file.json").code == 2);
  const std::string bad = temp_path("bad.json");
  {
    std::ofstream f(bad);
    f << "{\"vars\": [\"x\"], \"gens\": [[1, 2]]}";
  }
  CHECK(run("natural --in " + bad).code == 2);
  {
    std::ofstream f(bad);
    f << "{not json";
  }
  CHECK(run("natural --in " + bad).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("newton --ideal '(0)' --vars x").code == 2);
  CHECK(run("certify --ideal '(x^2)' --element x", "CLOSURE_SEED=abc").code == 2);
}

TEST_CASE("cli: output is byte-identical across runs and the seed variable overrides --seed") {
  const std::string args = "certify --ideal '(x^3,y^3,x*y^2)' --element 'x^2*y' --budget 3000";
  const auto a = run(args + " --seed 5");
  const auto b = run(args + " --seed 5");
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  const auto env = run(args + " --seed 5", "CLOSURE_SEED=9");
  const auto direct = run(args + " --seed 9");
  CHECK(env.out == direct.out);
  const auto s1 = run("selftest --budget-ms 60000 --max-instances 20 --seed 3");
  const auto s2 = run("selftest --budget-ms 60000 --max-instances 20 --seed 3");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(parsed(s1)["instances"] == 20);
}
