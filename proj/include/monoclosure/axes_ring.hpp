#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoclosure/monomial.hpp"
#include "monoclosure/rational.hpp"

namespace monoclosure {

/// S ⊆ V_1 × … × V_m with V_i = Q[[t_i]] truncated below degree N and all
/// constant terms equal. In S the uniformizers satisfy t_i t_j = 0 for i ≠ j,
/// so S/𝔪^N is the truncated complete ring of m axes.
struct GluedRingSpec {
  std::size_t branches = 1;
  std::size_t truncation = 6;

  friend bool operator==(const GluedRingSpec&, const GluedRingSpec&) = default;
};

class AxesRingElement {
 public:
  AxesRingElement() = default;
  explicit AxesRingElement(GluedRingSpec spec);

  static AxesRingElement constant(GluedRingSpec spec, Rational c);
  /// t_branch^degree, degree >= 1 (zero when degree >= N).
  static AxesRingElement uniformizer(GluedRingSpec spec, std::size_t branch, std::size_t degree = 1);

  const GluedRingSpec& spec() const noexcept { return spec_; }
  const Rational& constant_term() const noexcept { return constant_; }
  /// Coefficient of t_branch^degree; degree 0 gives the shared constant.
  const Rational& coefficient(std::size_t branch, std::size_t degree) const;
  void set_coefficient(std::size_t branch, std::size_t degree, Rational value);
  void set_constant(Rational value) { constant_ = std::move(value); }

  bool is_zero() const;
  /// Coordinates in the basis 1, t_1, …, t_1^{N-1}, t_2, …, t_m^{N-1}.
  std::vector<Rational> coordinates() const;
  std::string to_string() const;

  AxesRingElement& operator+=(const AxesRingElement& o);
  AxesRingElement& operator-=(const AxesRingElement& o);
  AxesRingElement& operator*=(const Rational& s);

  friend bool operator==(const AxesRingElement&, const AxesRingElement&) = default;

 private:
  GluedRingSpec spec_;
  Rational constant_;
  std::vector<std::vector<Rational>> branches_;  // branches_[i][k - 1] is the t_i^k coefficient
};

AxesRingElement operator+(AxesRingElement a, const AxesRingElement& b);
AxesRingElement operator-(AxesRingElement a, const AxesRingElement& b);
AxesRingElement operator*(const AxesRingElement& a, const AxesRingElement& b);
AxesRingElement operator*(AxesRingElement a, const Rational& s);
AxesRingElement pow(const AxesRingElement& a, Exponent k);

struct Term {
  Rational coefficient;
  ExponentVector exponents;
};
using Polynomial = std::vector<Term>;

/// Evaluates the ring map variable_i ↦ images[i].
AxesRingElement substitute(const std::vector<AxesRingElement>& images, const ExponentVector& m);
AxesRingElement substitute(const std::vector<AxesRingElement>& images, const Polynomial& f);

/// Decides f ∈ (gens)S + 𝔪^N by exact linear algebra over the multipliers
/// 1, t_i^k. false implies f ∉ (gens)S in the untruncated ring; true is only
/// evidence at truncation level N.
bool ideal_member(const AxesRingElement& f, const std::vector<AxesRingElement>& gens);

/// An element of the full product ∏ V_i (no glueing condition), used to probe
/// seminormality of the glued subring.
class ProductElement {
 public:
  explicit ProductElement(GluedRingSpec spec);
  const GluedRingSpec& spec() const noexcept { return spec_; }
  Rational& at(std::size_t branch, std::size_t degree) { return coeffs_[branch][degree]; }
  const Rational& at(std::size_t branch, std::size_t degree) const { return coeffs_[branch][degree]; }
  /// All branch constants agree, i.e. the element lies in the glued ring.
  bool is_glued() const;

  friend ProductElement operator*(const ProductElement& a, const ProductElement& b);

 private:
  GluedRingSpec spec_;
  std::vector<std::vector<Rational>> coeffs_;  // degrees 0..N-1 per branch
};

struct SeminormalityReport {
  std::size_t samples = 0;
  std::size_t square_and_cube_glued = 0;
  std::size_t violations = 0;
};

/// For random v in ∏ V_i, checks v², v³ ∈ S ⇒ v ∈ S. Requires N >= 4.
SeminormalityReport seminormality_probe(GluedRingSpec spec, std::size_t samples, std::uint64_t seed);

}  // namespace monoclosure
