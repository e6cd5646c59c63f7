#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "monoclosure/monomial.hpp"
#include "monoclosure/rational.hpp"

namespace monoclosure {

/// A primitive nonnegative nonzero integer vector. As a monomial valuation,
/// ord_w(x^a) = w·a and ord_w(I) is the minimum over the generators.
class Weight {
 public:
  Weight() = default;
  /// Throws InputError unless the entries are nonnegative, not all zero and
  /// have gcd 1.
  explicit Weight(std::vector<Integer> w);
  /// Divides by the gcd of the entries.
  static Weight primitive(std::vector<Integer> w);

  const std::vector<Integer>& values() const noexcept { return w_; }
  std::size_t size() const noexcept { return w_.size(); }
  const Integer& operator[](std::size_t i) const { return w_[i]; }

  Integer value(const ExponentVector& a) const;
  Rational value(const std::vector<Rational>& p) const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.w_ == b.w_; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.w_ < b.w_; }

 private:
  std::vector<Integer> w_;
};

/// The inequality w·x >= c bounding a Newton polyhedron.
struct Facet {
  Weight w;
  Rational c;

  friend bool operator==(const Facet& a, const Facet& b) { return a.w == b.w && a.c == b.c; }
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.w == b.w ? a.c < b.c : a.w < b.w;
  }
};

/// conv(vpoints) + R_{>=0}^n. Facets are computed on first request, once,
/// and shared between copies; concurrent readers are safe.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t dimension, std::vector<ExponentVector> vpoints);

  std::size_t dimension() const noexcept { return dim_; }
  const std::vector<ExponentVector>& vpoints() const noexcept { return vpoints_; }
  const std::vector<Facet>& facets() const;

 private:
  struct FacetCache;
  std::size_t dim_;
  std::vector<ExponentVector> vpoints_;
  std::shared_ptr<FacetCache> cache_;
};

/// Newton polyhedron of a nonzero ideal; DomainError for the zero ideal.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I);

/// Irredundant H-representation of conv(points) + orthant, sorted by (w, c).
/// Computed by incremental double description on the homogenized cone.
std::vector<Facet> compute_facets(std::size_t dimension, const std::vector<ExponentVector>& points);

/// A copy, so that it outlives a temporary polyhedron.
inline std::vector<Facet> facets(const NewtonPolyhedron& np) { return np.facets(); }

/// min over generators of w·a; DomainError for the zero ideal.
Integer ord(const Weight& w, const MonomialIdeal& I);

bool contains_point(const NewtonPolyhedron& np, const std::vector<Rational>& p);
bool contains_point(const NewtonPolyhedron& np, const ExponentVector& a);

std::vector<Rational> to_rational(const ExponentVector& a);

/// Maximum eps in [0, 1] with a ∈ conv(P) + eps·conv(Q) + orthant, or nullopt
/// when even eps = 0 is infeasible. Solved exactly with the simplex method.
std::optional<Rational> lp_max_scale(const std::vector<Rational>& a,
                                     const std::vector<ExponentVector>& P,
                                     const std::vector<ExponentVector>& Q);
std::optional<Rational> lp_max_scale(const ExponentVector& a, const std::vector<ExponentVector>& P,
                                     const std::vector<ExponentVector>& Q);

/// a ∈ conv(P) + orthant, decided by LP feasibility alone.
bool lp_in_hull_plus_orthant(const std::vector<Rational>& a, const std::vector<ExponentVector>& P);

/// min of w·x over conv(P) + orthant, by LP.
Rational lp_min_linear(const std::vector<Rational>& w, const std::vector<ExponentVector>& P);

}  // namespace monoclosure
