#include "monoclosure/random_ideals.hpp"

#include "monoclosure/rational.hpp"

namespace monoclosure {

std::vector<std::string> default_var_names(std::size_t n) {
  static const std::vector<std::string> small{"x", "y", "z", "w"};
  if (n <= small.size()) return {small.begin(), small.begin() + static_cast<std::ptrdiff_t>(n)};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const CorpusOptions& opts) {
  std::uniform_int_distribution<std::size_t> nvars(opts.min_vars, opts.max_vars);
  std::uniform_int_distribution<std::size_t> ngens(1, opts.max_gens);
  std::uniform_int_distribution<Exponent> expo(0, opts.max_exponent);
  const std::size_t n = nvars(rng);
  const std::size_t k = ngens(rng);
  std::vector<ExponentVector> gens;
  while (gens.size() < k) {
    ExponentVector g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = expo(rng);
    if (!g.is_one()) gens.push_back(std::move(g));
  }
  return MonomialIdeal(default_var_names(n), std::move(gens));
}

MonomialIdeal random_primary_ideal(std::mt19937_64& rng, const CorpusOptions& opts, bool maximal) {
  std::uniform_int_distribution<std::size_t> nvars(opts.min_vars, opts.max_vars);
  std::uniform_int_distribution<Exponent> power(1, std::max<Exponent>(1, opts.max_exponent));
  std::uniform_int_distribution<Exponent> expo(0, opts.max_exponent);
  std::uniform_int_distribution<std::size_t> extra(0, opts.max_gens > 1 ? opts.max_gens - 1 : 0);
  const std::size_t n = nvars(rng);
  std::vector<std::size_t> chosen;
  while (chosen.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (maximal || rng() % 2 == 0) chosen.push_back(i);
    }
  }
  std::vector<ExponentVector> gens;
  for (auto i : chosen) {
    ExponentVector g(n);
    g[i] = power(rng);
    gens.push_back(std::move(g));
  }
  for (std::size_t e = extra(rng); e > 0; --e) {
    ExponentVector g(n);
    for (auto i : chosen) g[i] = expo(rng);
    if (!g.is_one()) gens.push_back(std::move(g));
  }
  return MonomialIdeal(default_var_names(n), std::move(gens));
}

MonomialIdeal random_primary_below_degree(std::mt19937_64& rng, std::size_t n, Exponent d,
                                          const std::vector<Exponent>& weights,
                                          std::size_t extra_gens) {
  if (d < 2) throw InputError("degree bound must be at least 2");
  std::vector<Exponent> w = weights.empty() ? std::vector<Exponent>(n, 1) : weights;
  if (w.size() != n) throw InputError("one weight per variable is required");
  auto weighted = [&](const ExponentVector& a) {
    Exponent s = 0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i];
    return s;
  };
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] >= d) throw InputError("a variable weight is not below the degree bound");
    Exponent top = (d - 1) / w[i];
    std::uniform_int_distribution<Exponent> p(1, top);
    ExponentVector g(n);
    g[i] = p(rng);
    gens.push_back(std::move(g));
  }
  std::uniform_int_distribution<Exponent> expo(0, d - 1);
  for (std::size_t tries = 0; gens.size() < n + extra_gens && tries < 1000; ++tries) {
    ExponentVector g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = expo(rng);
    if (!g.is_one() && weighted(g) < d) gens.push_back(std::move(g));
  }
  return MonomialIdeal(default_var_names(n), std::move(gens));
}

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count,
                                         const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ideal(rng, opts));
  return out;
}

ExponentVector comparison_box(const MonomialIdeal& I, Exponent extra) {
  ExponentVector box = max_exponents(I);
  for (std::size_t i = 0; i < box.size(); ++i) box[i] += extra;
  return box;
}

}  // namespace monoclosure
