#include "monoclosure/oracles.hpp"

#include <algorithm>
#include <unordered_set>

#include "monoclosure/rational.hpp"

namespace monoclosure {

namespace {

class PowerSearch {
 public:
  PowerSearch(const std::vector<ExponentVector>& gens, std::size_t n) : gens_(gens), n_(n) {
    // suffix_min_[j][i]: smallest i-th exponent among gens[j..]; the last
    // column holds the smallest total degree.
    suffix_min_.assign(gens_.size() + 1, std::vector<Exponent>(n_ + 1, 0));
    for (std::size_t j = gens_.size(); j-- > 0;) {
      for (std::size_t i = 0; i < n_; ++i) {
        Exponent here = gens_[j][i];
        suffix_min_[j][i] = j + 1 < gens_.size() ? std::min(here, suffix_min_[j + 1][i]) : here;
      }
      Exponent deg = gens_[j].total_degree();
      suffix_min_[j][n_] = j + 1 < gens_.size() ? std::min(deg, suffix_min_[j + 1][n_]) : deg;
    }
  }

  bool run(const ExponentVector& target, unsigned k) { return search(0, target, k); }

 private:
  bool search(std::size_t j, const ExponentVector& residual, unsigned remaining) {
    if (remaining == 0) return true;
    if (j == gens_.size()) return false;
    const unsigned __int128 m = remaining;
    for (std::size_t i = 0; i < n_; ++i) {
      if (m * suffix_min_[j][i] > residual[i]) return false;
    }
    if (m * suffix_min_[j][n_] > residual.total_degree()) return false;

    std::vector<Exponent> key;
    key.reserve(n_ + 2);
    key.push_back(j);
    key.push_back(remaining);
    key.insert(key.end(), residual.begin(), residual.end());
    ExponentVector memo_key(std::move(key));
    if (failed_.contains(memo_key)) return false;

    const auto& g = gens_[j];
    unsigned most = remaining;
    for (std::size_t i = 0; i < n_; ++i) {
      if (g[i] > 0) most = static_cast<unsigned>(std::min<Exponent>(most, residual[i] / g[i]));
    }
    for (unsigned c = most + 1; c-- > 0;) {
      ExponentVector next = residual;
      for (std::size_t i = 0; i < n_; ++i) next[i] -= c * g[i];
      if (search(j + 1, next, remaining - c)) return true;
    }
    failed_.insert(std::move(memo_key));
    return false;
  }

  const std::vector<ExponentVector>& gens_;
  std::size_t n_;
  std::vector<std::vector<Exponent>> suffix_min_;
  std::unordered_set<ExponentVector, ExponentVectorHash> failed_;
};

}  // namespace

bool monomial_in_power(const ExponentVector& b, const MonomialIdeal& I, unsigned k) {
  require_length(I, b);
  if (k == 0) return true;
  if (I.is_zero()) return false;
  PowerSearch search(I.generators(), I.num_vars());
  return search.run(b, k);
}

bool power_in_power(const ExponentVector& a, const MonomialIdeal& I, unsigned n) {
  if (n == 0) throw InputError("power_in_power needs n >= 1");
  return monomial_in_power(scaled(a, n), I, n + 1);
}

std::string to_string(const OracleAnswer& ans) {
  return ans.yes ? "Yes(" + std::to_string(ans.n) + ")" : "NoUpTo(" + std::to_string(ans.n) + ")";
}

OracleAnswer inner_oracle(const ExponentVector& a, const MonomialIdeal& I, unsigned N) {
  if (N == 0) throw InputError("oracle bound must be at least 1");
  for (unsigned n = 1; n <= N; ++n) {
    if (power_in_power(a, I, n)) return OracleAnswer::Yes(n);
  }
  return OracleAnswer::NoUpTo(N);
}

OracleAnswer integral_oracle(const ExponentVector& a, const MonomialIdeal& I, unsigned N) {
  if (N == 0) throw InputError("oracle bound must be at least 1");
  for (unsigned k = 1; k <= N; ++k) {
    if (monomial_in_power(scaled(a, k), I, k)) return OracleAnswer::Yes(k);
  }
  return OracleAnswer::NoUpTo(N);
}

std::size_t OracleCache::KeyHash::operator()(const Key& k) const noexcept {
  return k.ideal_hash * 31 + ExponentVectorHash{}(k.point) * 7 + static_cast<std::size_t>(k.kind) +
         k.bound;
}

template <class F>
OracleAnswer OracleCache::lookup(Key key, F compute) {
  {
    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  OracleAnswer ans = compute();
  std::lock_guard lock(mu_);
  cache_.emplace(std::move(key), ans);
  return ans;
}

OracleAnswer OracleCache::inner(const ExponentVector& a, const MonomialIdeal& I, unsigned N) {
  return lookup(Key{MonomialIdealHash{}(I), I, a, 0, N}, [&] { return inner_oracle(a, I, N); });
}

OracleAnswer OracleCache::integral(const ExponentVector& a, const MonomialIdeal& I, unsigned N) {
  return lookup(Key{MonomialIdealHash{}(I), I, a, 1, N}, [&] { return integral_oracle(a, I, N); });
}

std::size_t OracleCache::size() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

}  // namespace monoclosure
