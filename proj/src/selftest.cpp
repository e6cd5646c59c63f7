#include "monoclosure/selftest.hpp"

#include <random>

#include "monoclosure/axes_ring.hpp"
#include "monoclosure/closures.hpp"
#include "monoclosure/oracles.hpp"
#include "monoclosure/random_ideals.hpp"
#include "monoclosure/text_io.hpp"

namespace monoclosure {

namespace {

class Checker {
 public:
  explicit Checker(SelftestReport& r) : r_(r) {}

  void expect(bool ok, const std::string& property, const MonomialIdeal& I) {
    ++r_.checks;
    if (!ok) r_.failures.push_back(property + " fails for " + format_ideal(I));
  }

 private:
  SelftestReport& r_;
};

void check_ideal(const MonomialIdeal& I, Checker& check) {
  const MonomialIdeal facet = inner_integral_closure_facet(I);
  check.expect(facet == inner_integral_closure_lp(I), "facet/LP pipeline agreement", I);
  check.expect(facet == inner_via_relevant(I), "facet/relevant-ideal pipeline agreement", I);

  const MonomialIdeal natural = natural_closure(I);
  const MonomialIdeal closure = integral_closure(I);
  const MonomialIdeal lower = axes_lower_bound(I);
  check.expect(is_subset(I, natural), "extensivity of natural closure", I);
  check.expect(natural_closure(natural) == natural, "idempotence of natural closure", I);
  check.expect(is_subset(natural, lower), "natural closure below axes lower bound", I);
  check.expect(is_subset(lower, closure), "axes lower bound below integral closure", I);
  check.expect(inner_integral_closure(closure) == facet, "inner closure of integral closure", I);

  for (std::size_t i = 0; i < I.num_vars(); ++i) {
    const MonomialIdeal sat = saturate_variable(I, i);
    check.expect(natural_closure(sat) == saturate_variable(natural, i),
                 "saturation commutes with natural closure", I);
  }

  if (is_monomial_primary(I)) {
    check.expect(lower == natural, "primary equality", I);
  }

  const ExponentVector box = inner_closure_box(I);
  for_each_in_box(box, [&](const ExponentVector& a) {
    const OracleAnswer inner = inner_oracle(a, I);
    const bool member = contains(facet, a);
    if (inner.yes) check.expect(member, "inner oracle witness implies membership", I);
    if (!member) check.expect(!inner.yes, "non-member has no inner witness", I);
    const OracleAnswer integral = integral_oracle(a, I);
    if (integral.yes) check.expect(contains(closure, a), "integral oracle witness implies membership", I);
  });
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, std::chrono::milliseconds budget,
                            std::size_t max_instances) {
  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + budget;
  SelftestReport report;
  Checker check(report);
  std::mt19937_64 rng(seed);
  CorpusOptions opts;
  opts.max_exponent = 4;

  for (std::size_t m = 2; m <= 3; ++m) {
    const SeminormalityReport probe = seminormality_probe({m, 6}, 50, seed + m);
    ++report.checks;
    if (probe.violations != 0) {
      report.failures.push_back("glued ring with " + std::to_string(m) +
                                " branches is not seminormal on a sample");
    }
  }

  while (report.instances < max_instances) {
    if (clock::now() >= deadline) {
      report.budget_exhausted = true;
      break;
    }
    const bool primary = report.instances % 3 == 2;
    const MonomialIdeal I = primary ? random_primary_ideal(rng, opts) : random_ideal(rng, opts);
    check_ideal(I, check);
    ++report.instances;
  }
  return report;
}

}  // namespace monoclosure
