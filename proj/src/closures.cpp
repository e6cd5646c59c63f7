#include "monoclosure/closures.hpp"

#include <algorithm>

#include "monoclosure/text_io.hpp"

namespace monoclosure {

ExponentVector integral_closure_box(const MonomialIdeal& I) { return max_exponents(I); }

ExponentVector inner_closure_box(const MonomialIdeal& I) {
  ExponentVector box = max_exponents(I);
  for (std::size_t i = 0; i < box.size(); ++i) box[i] += 1;
  return box;
}

// A point a of NP(I) + (1/n)NP(J) with a_i > M_i(I) + M_i(J) has a positive
// orthant component in direction i, so a - e_i is still a member.
ExponentVector special_part_box(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  return max_exponents(I) + max_exponents(J);
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  NewtonPolyhedron np = newton_polyhedron(I);
  return MonomialIdeal(I.vars(), minimal_points_in_box(integral_closure_box(I), [&](const auto& a) {
                         return contains_point(np, a);
                       }));
}

bool inner_member_facet(const NewtonPolyhedron& np, const ExponentVector& a) {
  if (a.size() != np.dimension()) throw InputError("point dimension mismatch");
  for (const auto& f : np.facets()) {
    Rational v(f.w.value(a));
    if (f.c > 0 ? v <= f.c : v < f.c) return false;
  }
  return true;
}

bool inner_member_lp(const MonomialIdeal& I, const ExponentVector& a) {
  require_length(I, a);
  if (I.is_zero()) return false;
  auto eps = lp_max_scale(a, I.generators(), I.generators());
  return eps && *eps > 0;
}

MonomialIdeal inner_integral_closure_facet(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  NewtonPolyhedron np = newton_polyhedron(I);
  return MonomialIdeal(I.vars(), minimal_points_in_box(inner_closure_box(I), [&](const auto& a) {
                         return inner_member_facet(np, a);
                       }));
}

MonomialIdeal inner_integral_closure_lp(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  return MonomialIdeal(I.vars(), minimal_points_in_box(inner_closure_box(I), [&](const auto& a) {
                         return inner_member_lp(I, a);
                       }));
}

MonomialIdeal inner_integral_closure(const MonomialIdeal& I) {
  return inner_integral_closure_facet(I);
}

bool special_member(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& a) {
  require_same_ambient(I, J);
  require_length(I, a);
  if (I.is_zero() || J.is_zero()) return false;
  auto eps = lp_max_scale(a, I.generators(), J.generators());
  return eps && *eps > 0;
}

MonomialIdeal special_part(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.vars());
  return MonomialIdeal(I.vars(), minimal_points_in_box(special_part_box(I, J), [&](const auto& a) {
                         return special_member(I, J, a);
                       }));
}

MonomialIdeal natural_closure(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  return sum(I, inner_integral_closure(I));
}

bool is_naturally_closed(const MonomialIdeal& I) { return natural_closure(I) == I; }

ContinuousClosure continuous_closure_monomial(const MonomialIdeal& I) {
  ContinuousClosure out;
  out.ideal = natural_closure(I);
  out.field_semantics = "complex coefficients (characteristic 0)";
  out.justification = {
      "natural closure is contained in continuous closure for every ideal",
      "a naturally closed monomial ideal over C is continuously closed, so "
      "I^cont is contained in (I^nat)^cont = I^nat",
      "hence I^cont = I^nat = " + format_ideal(out.ideal),
  };
  return out;
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("the zero ideal has no Rees valuations");
  std::vector<ReesValuation> out;
  if (I.is_unit()) return out;
  NewtonPolyhedron np = newton_polyhedron(I);
  for (const auto& f : np.facets()) {
    if (f.c > 0) out.push_back(ReesValuation{f.w, f.c});
  }
  return out;
}

namespace {

void threshold_solutions(const Weight& w, std::size_t pos, Integer remaining, ExponentVector& a,
                         std::vector<ExponentVector>& out) {
  if (remaining <= 0) {
    out.push_back(a);
    return;
  }
  std::size_t i = pos;
  while (i < w.size() && w[i] == 0) ++i;
  if (i == w.size()) return;
  Integer top = ceil_div(Rational(remaining, w[i]));
  if (!top.fits_ulong_p()) throw DomainError("relevant ideal threshold too large");
  const unsigned long limit = top.get_ui();
  for (unsigned long v = 0; v <= limit; ++v) {
    a[i] = v;
    threshold_solutions(w, i + 1, remaining - w[i] * Integer(v), a, out);
  }
  a[i] = 0;
}

}  // namespace

MonomialIdeal relevant_ideal(const Weight& w, const MonomialIdeal& I) {
  Integer k = ord(w, I);
  if (k <= 0) {
    throw DomainError("ord_w(I) = 0: the valuation does not map I into its maximal ideal");
  }
  // ord_w takes integer values on monomials, so "order > k" means >= k + 1.
  Integer threshold = floor_of(Rational(k)) + 1;
  ExponentVector a(I.num_vars());
  std::vector<ExponentVector> gens;
  threshold_solutions(w, 0, threshold, a, gens);
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal inner_via_relevant(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return I;
  std::vector<MonomialIdeal> relevant;
  for (const auto& rv : rees_valuations(I)) relevant.push_back(relevant_ideal(rv.w, I));
  // Minimal generators of the intersection lie in the inner-closure box: the
  // intersection sits inside NP(I), and lowering a coordinate that exceeds
  // M_i + 1 keeps every Rees value above its threshold.
  return MonomialIdeal(I.vars(), minimal_points_in_box(inner_closure_box(I), [&](const auto& a) {
                         return std::all_of(relevant.begin(), relevant.end(),
                                            [&](const MonomialIdeal& R) { return contains(R, a); });
                       }));
}

MonomialIdeal axes_lower_bound(const MonomialIdeal& I, LowerBoundTrace* trace) {
  if (I.is_zero()) return I;
  auto primes = monomial_primes(I.vars());
  MonomialIdeal K = I;
  std::size_t iterations = 0;
  while (true) {
    ++iterations;
    MonomialIdeal closure = integral_closure(K);
    MonomialIdeal next = natural_closure(K);
    for (const auto& P : primes) {
      if (P.is_zero()) continue;
      MonomialIdeal contribution = intersect(product(P, closure), colon(K, P));
      if (trace && !is_subset(contribution, next)) trace->contributions.emplace_back(P, contribution);
      next = sum(next, contribution);
    }
    if (next == K) break;
    K = std::move(next);
  }
  if (trace) trace->iterations = iterations;
  return K;
}

std::string to_string(AxesMembershipVerdict::Kind kind) {
  switch (kind) {
    case AxesMembershipVerdict::Kind::InLowerBound: return "InLowerBound";
    case AxesMembershipVerdict::Kind::OutsideIntegralClosure: return "OutsideIntegralClosure";
    case AxesMembershipVerdict::Kind::OutCertified: return "OutCertified";
    case AxesMembershipVerdict::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

AxesMembershipVerdict axes_membership(const MonomialIdeal& I, const ExponentVector& m,
                                      const CertifyConfig& search) {
  require_length(I, m);
  using Kind = AxesMembershipVerdict::Kind;
  if (contains(axes_lower_bound(I), m)) return {Kind::InLowerBound, std::nullopt};
  if (!contains(integral_closure(I), m)) return {Kind::OutsideIntegralClosure, std::nullopt};
  if (auto cert = certify_exclusion(I, m, search)) return {Kind::OutCertified, std::move(cert)};
  return {Kind::Unknown, std::nullopt};
}

bool is_primary_to(const MonomialIdeal& I, const std::vector<std::size_t>& vars) {
  if (I.is_zero() || I.is_unit() || vars.empty()) return false;
  for (const auto& g : I.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0 && std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
  }
  for (auto v : vars) {
    if (v >= I.num_vars()) return false;
    bool pure_power = std::any_of(I.generators().begin(), I.generators().end(), [&](const auto& g) {
      auto s = support(g);
      return s.size() == 1 && s.front() == v;
    });
    if (!pure_power) return false;
  }
  return true;
}

bool is_monomial_primary(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit()) return false;
  return is_primary_to(I, support(I));
}

bool fiber_exclusion_monomial(const ExponentVector& f, const ExponentVector& g,
                              const MonomialIdeal& I_fiber, const MonomialIdeal& J,
                              const std::vector<std::size_t>& fiber_vars) {
  require_same_ambient(I_fiber, J);
  require_length(J, f);
  require_length(J, g);
  std::vector<std::size_t> sorted = fiber_vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("fiber variables must be distinct");
  }
  for (auto v : sorted) {
    if (v >= J.num_vars()) throw InputError("fiber variable index out of range");
  }
  for (auto v : support(g)) {
    if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
      throw InputError("g must be a monomial in the fiber variables");
    }
  }
  for (auto v : support(I_fiber)) {
    if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
      throw InputError("the fiber ideal must involve only fiber variables");
    }
  }
  if (!is_primary_to(I_fiber, sorted)) {
    throw DomainError("the fiber ideal is not primary to the ideal of the fiber variables");
  }
  if (contains(natural_closure(J), f)) return false;
  MonomialIdeal fiber = restrict_to(I_fiber, sorted);
  return !contains(natural_closure(fiber), restrict_to(g, sorted));
}

}  // namespace monoclosure
