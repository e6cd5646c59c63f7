#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "monoclosure/monomial.hpp"

namespace monoclosure {

/// Brute-force membership x^b ∈ I^k by choosing k generators; no polyhedral
/// geometry is involved. Failed (generator index, count, residual) states are
/// memoized.
bool monomial_in_power(const ExponentVector& b, const MonomialIdeal& I, unsigned k);

/// x^{n·a} ∈ I^{n+1}.
bool power_in_power(const ExponentVector& a, const MonomialIdeal& I, unsigned n);

/// Yes(n) carries the least witness n; NoUpTo(N) means no witness up to N.
struct OracleAnswer {
  bool yes = false;
  unsigned n = 0;

  static OracleAnswer Yes(unsigned n) { return {true, n}; }
  static OracleAnswer NoUpTo(unsigned bound) { return {false, bound}; }
  friend bool operator==(const OracleAnswer&, const OracleAnswer&) = default;
};

std::string to_string(const OracleAnswer& ans);

inline constexpr unsigned kDefaultOracleBound = 20;

/// Least n <= N with x^{n·a} ∈ I^{n+1}.
OracleAnswer inner_oracle(const ExponentVector& a, const MonomialIdeal& I,
                          unsigned N = kDefaultOracleBound);
/// Least k <= N with x^{k·a} ∈ I^k.
OracleAnswer integral_oracle(const ExponentVector& a, const MonomialIdeal& I,
                             unsigned N = kDefaultOracleBound);

/// Thread-safe memo of oracle answers keyed by (ideal, point, kind, bound).
class OracleCache {
 public:
  OracleAnswer inner(const ExponentVector& a, const MonomialIdeal& I,
                     unsigned N = kDefaultOracleBound);
  OracleAnswer integral(const ExponentVector& a, const MonomialIdeal& I,
                        unsigned N = kDefaultOracleBound);
  std::size_t size() const;

 private:
  struct Key {
    std::size_t ideal_hash;
    MonomialIdeal ideal;
    ExponentVector point;
    int kind;
    unsigned bound;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  template <class F>
  OracleAnswer lookup(Key key, F compute);

  mutable std::mutex mu_;
  std::unordered_map<Key, OracleAnswer, KeyHash> cache_;
};

}  // namespace monoclosure
