#pragma once

#include <random>
#include <string>
#include <vector>

#include "monoclosure/monomial.hpp"
#include "monoclosure/rational.hpp"
#include "monoclosure/text_io.hpp"

namespace testing {

using namespace monoclosure;

inline MonomialIdeal ideal(const std::string& text, const std::vector<std::string>& vars) {
  return parse_ideal(text, vars);
}

inline ExponentVector mono(const std::string& text, const std::vector<std::string>& vars) {
  return parse_monomial(text, vars);
}

inline std::vector<std::string> names(std::size_t n) {
  static const std::vector<std::string> base{"x", "y", "z", "w", "s", "t"};
  return {base.begin(), base.begin() + static_cast<std::ptrdiff_t>(n)};
}

/// Seeded source of small monomial data for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  ExponentVector exponent(std::size_t n, Exponent max) {
    ExponentVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = uniform(0, max);
    return a;
  }

  ExponentVector nonzero_exponent(std::size_t n, Exponent max) {
    for (;;) {
      ExponentVector a = exponent(n, max);
      if (!a.is_one()) return a;
    }
  }

  MonomialIdeal ideal(std::size_t n, std::size_t max_gens, Exponent max) {
    std::vector<ExponentVector> gens;
    const std::size_t k = uniform(1, max_gens);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(nonzero_exponent(n, max));
    return make_ideal(names(n), gens);
  }

  /// Contains a pure power of every variable.
  MonomialIdeal primary_ideal(std::size_t n, std::size_t extra, Exponent max) {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(scaled(unit_vector(n, i), uniform(1, max)));
    for (std::size_t i = 0; i < extra; ++i) gens.push_back(nonzero_exponent(n, max));
    return make_ideal(names(n), gens);
  }

  Rational rational(int max_num, int max_den) {
    const int num = static_cast<int>(uniform(0, static_cast<std::size_t>(max_num)));
    const int den = static_cast<int>(uniform(1, static_cast<std::size_t>(max_den)));
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Divisibility-minimal elements of a finite point set.
inline std::vector<ExponentVector> minimal_elements(const std::vector<ExponentVector>& pts) {
  std::vector<ExponentVector> out;
  for (const auto& p : pts) {
    bool minimal = true;
    for (const auto& q : pts) {
      if (q != p && q.divides(p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All points 0 <= a <= bound, without the library iterator.
inline std::vector<ExponentVector> box_points(const ExponentVector& bound) {
  std::vector<ExponentVector> out;
  ExponentVector a(bound.size());
  for (;;) {
    out.push_back(a);
    std::size_t i = 0;
    while (i < bound.size() && a[i] == bound[i]) a[i++] = 0;
    if (i == bound.size()) return out;
    ++a[i];
  }
}

/// Rank of a rational matrix by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace testing
