#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monoclosure/monomial.hpp"

namespace monoclosure {

struct CorpusOptions {
  std::size_t min_vars = 1;
  std::size_t max_vars = 4;
  std::size_t max_gens = 6;
  Exponent max_exponent = 5;
};

/// x, y, z, w for up to four variables, x1..xn beyond.
std::vector<std::string> default_var_names(std::size_t n);

/// Nonzero proper monomial ideal; generators are nonzero exponent vectors.
MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusOptions& opts = {});

/// Ideal primary to the ideal of a random nonempty set of variables (or of
/// all variables when `maximal` is set): a pure power of each chosen variable
/// plus random mixed generators in those variables.
MonomialIdeal random_primary_ideal(std::mt19937_64& rng, const CorpusOptions& opts = {},
                                   bool maximal = false);

/// Primary to all variables with every generator of total degree < d
/// (d > 1 required), weighted by `weights` when given.
MonomialIdeal random_primary_below_degree(std::mt19937_64& rng, std::size_t n, Exponent d,
                                          const std::vector<Exponent>& weights,
                                          std::size_t extra_gens);

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count,
                                         const CorpusOptions& opts = {});

/// I's box bound M_i + extra in every coordinate (points used for
/// monomial-by-monomial comparisons).
ExponentVector comparison_box(const MonomialIdeal& I, Exponent extra);

}  // namespace monoclosure
