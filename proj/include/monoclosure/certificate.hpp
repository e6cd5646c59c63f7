#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoclosure/axes_ring.hpp"
#include "monoclosure/monomial.hpp"

namespace monoclosure {

/// A ring map from the polynomial ring of `ideal` into a truncated glued ring
/// under which the image of x^element is not in the extended ideal + 𝔪^N.
/// That exhibits x^element ∉ ideal^ax.
struct ExclusionCertificate {
  MonomialIdeal ideal;
  ExponentVector element;
  GluedRingSpec ring;
  std::vector<AxesRingElement> images;  // one per variable
};

struct CertifyConfig {
  /// Branch counts to try, in order; empty means {number of variables}.
  std::vector<std::size_t> branch_counts;
  std::vector<std::size_t> truncations{6};
  /// Integer coefficient range of the structured linear maps.
  int pool_min = -2;
  int pool_max = 2;
  std::uint64_t seed = 42;
  /// Candidate maps examined per (branches, truncation) pair.
  std::size_t budget = 10000;
  std::size_t workers = 1;
};

/// Integer coefficients of the structured search in the order tried
/// (0, 1, -1, 2, -2, …).
std::vector<int> coefficient_pool(int lo, int hi);

/// The candidate map with the given index. Indices below the number of
/// structured linear maps enumerate variable ↦ Σ c_ij t_j with c_ij from the
/// pool in mixed radix; later indices draw seeded random low-degree maps.
std::vector<AxesRingElement> candidate_map(std::size_t num_vars, GluedRingSpec spec,
                                           const CertifyConfig& config, std::uint64_t index);

/// Searches candidate maps in index order and returns the lowest-index map
/// excluding x^f; std::nullopt when the budget is exhausted. Independent of
/// the worker count.
std::optional<ExclusionCertificate> certify_exclusion(const MonomialIdeal& I,
                                                      const ExponentVector& f,
                                                      const CertifyConfig& config = {});

struct VerificationResult {
  bool verified = false;
  std::string diagnostic;
};

/// Recomputes every image from the stored map and re-decides membership.
VerificationResult verify_certificate(const ExclusionCertificate& cert);

}  // namespace monoclosure
