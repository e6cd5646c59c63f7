#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoclosure/certificate.hpp"
#include "monoclosure/monomial.hpp"
#include "monoclosure/polyhedra.hpp"

namespace monoclosure {

// Generator boxes. Every minimal generator of the respective closure lies in
// 0 <= a <= box; above the box a point of the closure stays in it after
// lowering the offending coordinate by one.
ExponentVector integral_closure_box(const MonomialIdeal& I);
ExponentVector inner_closure_box(const MonomialIdeal& I);
ExponentVector special_part_box(const MonomialIdeal& I, const MonomialIdeal& J);

/// Lattice points of NP(I). The zero ideal is integrally closed.
MonomialIdeal integral_closure(const MonomialIdeal& I);

/// x^a ∈ I_{>1} by facets: w·a >= c for every facet, strictly when c > 0.
bool inner_member_facet(const NewtonPolyhedron& np, const ExponentVector& a);
/// x^a ∈ I_{>1} by LP: a ∈ (1 + eps)·NP(I) for some eps > 0.
bool inner_member_lp(const MonomialIdeal& I, const ExponentVector& a);

MonomialIdeal inner_integral_closure_facet(const MonomialIdeal& I);
MonomialIdeal inner_integral_closure_lp(const MonomialIdeal& I);
/// The facet pipeline; the LP pipeline is an independent cross-check.
MonomialIdeal inner_integral_closure(const MonomialIdeal& I);

/// x^a ∈ I_{J-sp}: a ∈ NP(I) + (1/n)·NP(J) for some n >= 1.
bool special_member(const MonomialIdeal& I, const MonomialIdeal& J, const ExponentVector& a);
/// J-special part of the integral closure of I; zero if I or J is zero.
MonomialIdeal special_part(const MonomialIdeal& I, const MonomialIdeal& J);

/// I + I_{>1}.
MonomialIdeal natural_closure(const MonomialIdeal& I);
bool is_naturally_closed(const MonomialIdeal& I);

struct ContinuousClosure {
  MonomialIdeal ideal;
  std::string field_semantics;
  std::vector<std::string> justification;
};

/// For monomial ideals over C the continuous closure equals the natural
/// closure; the result carries that reasoning for verbose output.
ContinuousClosure continuous_closure_monomial(const MonomialIdeal& I);

struct ReesValuation {
  Weight w;
  Rational order;
};

/// Facet normals of NP(I) with positive offset, with their orders.
/// Empty for the unit ideal.
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& I);

/// Contraction of the (k+1)-st power of the valuation ideal: monomials with
/// w·a >= floor(k) + 1, k = ord_w(I). DomainError when ord_w(I) = 0.
MonomialIdeal relevant_ideal(const Weight& w, const MonomialIdeal& I);

/// Intersection of the relevant ideals of all Rees valuations; agrees with
/// inner_integral_closure. The unit ideal (no Rees valuations) maps to itself.
MonomialIdeal inner_via_relevant(const MonomialIdeal& I);

struct LowerBoundTrace {
  std::size_t iterations = 0;
  /// (prime, contribution) pairs that enlarged the ideal, in discovery order.
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> contributions;
};

/// Least fixed point of K ↦ K^♮ + Σ_P (P·K̄) ∩ (K : P) over monomial primes,
/// starting from I. Contained in I^ax.
MonomialIdeal axes_lower_bound(const MonomialIdeal& I, LowerBoundTrace* trace = nullptr);

struct AxesMembershipVerdict {
  enum class Kind { InLowerBound, OutsideIntegralClosure, OutCertified, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<ExclusionCertificate> certificate;
};

std::string to_string(AxesMembershipVerdict::Kind kind);

AxesMembershipVerdict axes_membership(const MonomialIdeal& I, const ExponentVector& m,
                                      const CertifyConfig& search = {});

/// Monomial form of the fiber criterion: true certifies
/// g·f ∉ (I_fiber·R + g·J)^cont. I_fiber must live in the fiber variables and
/// be primary to their ideal (DomainError otherwise).
bool fiber_exclusion_monomial(const ExponentVector& f, const ExponentVector& g,
                              const MonomialIdeal& I_fiber, const MonomialIdeal& J,
                              const std::vector<std::size_t>& fiber_vars);

/// I is primary to the ideal generated by the variables `vars` and involves
/// no other variable.
bool is_primary_to(const MonomialIdeal& I, const std::vector<std::size_t>& vars);
/// I is primary to some monomial prime (the ideal of its support).
bool is_monomial_primary(const MonomialIdeal& I);

}  // namespace monoclosure
