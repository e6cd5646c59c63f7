#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoclosure/monomial.hpp"
#include "monoclosure/polyhedra.hpp"

namespace monoclosure {

/// Supporting hyperplane w·x = c through μ of conv(gens(𝔄) ∪ {μ}) + orthant,
/// with c > 0 and w the lexicographically least such facet normal.
struct SeparatingFunctional {
  Weight w;
  Rational c;
};

/// DomainError when μ ∈ 𝔄^♮ (μ is then interior or already in 𝔄) or when
/// 𝔄 is not naturally closed.
SeparatingFunctional separating_functional(const MonomialIdeal& A, const ExponentVector& mu);

/// Monomials of total degree <= d in degree-lex order (x_1 > x_2 > …).
std::vector<ExponentVector> monomials_up_to_degree(std::size_t num_vars, unsigned d);

/// Greedy enlargement of the zero ideal: each monomial ρ of degree <= box
/// (degree-lex order) is absorbed when (current + ρ)^♮ still excludes μ.
/// For μ = 1 this is the ideal of all variables.
MonomialIdeal maximal_naturally_closed_excluding(const std::vector<std::string>& vars,
                                                 const ExponentVector& mu, unsigned box_degree);

/// No monomial of degree <= box outside I can be added without the natural
/// closure capturing μ.
bool is_maximal_excluding_within_box(const MonomialIdeal& I, const ExponentVector& mu,
                                     unsigned box_degree);

struct StructureBlock {
  std::vector<std::size_t> vars;  // indices into the ambient variable list
  ExponentVector mu;              // μ_j, over `vars`
  MonomialIdeal component;        // I_j, in the subring on `vars`
};

/// 𝔄 = I_1R + μ_1 I_2R + … + μ_1⋯μ_{t-1} I_tR. Maximality of the I_j is
/// certified only up to `box_degree`.
struct StructureDecomposition {
  std::vector<StructureBlock> blocks;
  unsigned box_degree = 0;
};

struct DecompositionReport {
  std::optional<StructureDecomposition> decomposition;
  std::string failure;
  bool ok() const noexcept { return decomposition.has_value(); }
};

/// Extracts the blocks recursively (separating functional → first block,
/// colon by ν → residual ideal) and checks every clause of the decomposition.
DecompositionReport verify_decomposition(const MonomialIdeal& A, const ExponentVector& mu,
                                         unsigned box_degree);

/// Σ_j μ_1⋯μ_{j-1} I_j R over `vars`.
MonomialIdeal recompose(const StructureDecomposition& d, const std::vector<std::string>& vars);

}  // namespace monoclosure
