#include "monoclosure/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "monoclosure/rational.hpp"

namespace monoclosure {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent overflow");
  return r;
}

void require_lengths(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw InputError("exponent vectors of different lengths: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
}

}  // namespace

bool ExponentVector::divides(const ExponentVector& other) const {
  require_lengths(*this, other);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Exponent ExponentVector::total_degree() const {
  Exponent d = 0;
  for (Exponent x : e_) d = checked_add(d, x);
  return d;
}

bool ExponentVector::is_one() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_lengths(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

ExponentVector scaled(const ExponentVector& a, Exponent k) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

ExponentVector monus(const ExponentVector& a, const ExponentVector& b) {
  require_lengths(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_lengths(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector unit_vector(std::size_t n, std::size_t i) {
  ExponentVector r(n);
  r[i] = 1;
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent x : v) {
    h ^= std::hash<Exponent>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, std::vector<ExponentVector> gens)
    : vars_(std::move(vars)) {
  for (const auto& g : gens) {
    if (g.size() != vars_.size()) {
      throw InputError("generator has " + std::to_string(g.size()) + " exponents but the ring has " +
                       std::to_string(vars_.size()) + " variables");
    }
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> vars) {
  return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> vars) {
  auto n = vars.size();
  return MonomialIdeal(std::move(vars), {ExponentVector(n)});
}

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }

std::size_t MonomialIdealHash::operator()(const MonomialIdeal& I) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(I.num_vars());
  for (const auto& name : I.vars()) h = h * 31 + std::hash<std::string>{}(name);
  for (const auto& g : I.generators()) h = h * 1000003 + ExponentVectorHash{}(g);
  return h;
}

MonomialIdeal make_ideal(std::vector<std::string> vars, std::vector<ExponentVector> raw_gens) {
  return MonomialIdeal(std::move(vars), std::move(raw_gens));
}

void require_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.vars() != J.vars()) throw InputError("ideals live in different polynomial rings");
}

void require_length(const MonomialIdeal& I, const ExponentVector& m) {
  if (m.size() != I.num_vars()) {
    throw InputError("monomial has " + std::to_string(m.size()) + " exponents but the ring has " +
                     std::to_string(I.num_vars()) + " variables");
  }
}

bool contains(const MonomialIdeal& I, const ExponentVector& m) {
  require_length(I, m);
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const ExponentVector& g) { return g.divides(m); });
}

bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const ExponentVector& g) { return contains(J, g); });
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) gens.push_back(a + b);
  }
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
  if (k == 0) throw InputError("power exponent must be positive");
  MonomialIdeal result = I;
  for (unsigned i = 1; i < k; ++i) result = product(result, I);
  return result;
}

MonomialIdeal multiply(const MonomialIdeal& I, const ExponentVector& m) {
  require_length(I, m);
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) gens.push_back(g + m);
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& m) {
  require_length(I, m);
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) gens.push_back(monus(g, m));
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  if (J.is_zero()) throw DomainError("colon by the zero ideal is undefined");
  MonomialIdeal result = colon(I, J.generators().front());
  for (std::size_t k = 1; k < J.size(); ++k) {
    result = intersect(result, colon(I, J.generators()[k]));
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ambient(I, J);
  std::vector<ExponentVector> gens;
  gens.reserve(I.size() * J.size());
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) gens.push_back(lcm(a, b));
  }
  return MonomialIdeal(I.vars(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    ExponentVector r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = g[i] > 0 ? 1 : 0;
    gens.push_back(std::move(r));
  }
  return MonomialIdeal(I.vars(), std::move(gens));
}

std::vector<MonomialIdeal> monomial_primes(const std::vector<std::string>& vars) {
  const std::size_t n = vars.size();
  if (n >= 8 * sizeof(std::size_t)) throw InputError("too many variables");
  std::vector<MonomialIdeal> primes;
  primes.push_back(MonomialIdeal::zero(vars));
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) gens.push_back(unit_vector(n, i));
    }
    primes.emplace_back(vars, std::move(gens));
  }
  return primes;
}

MonomialIdeal saturate_variable(const MonomialIdeal& I, std::size_t i) {
  if (i >= I.num_vars()) throw InputError("variable index out of range");
  std::vector<ExponentVector> gens = I.generators();
  for (auto& g : gens) g[i] = 0;
  return MonomialIdeal(I.vars(), std::move(gens));
}

ExponentVector max_exponents(const MonomialIdeal& I) {
  ExponentVector m(I.num_vars());
  for (const auto& g : I.generators()) m = lcm(m, g);
  return m;
}

void for_each_in_box(const ExponentVector& bound,
                     const std::function<void(const ExponentVector&)>& visit) {
  const std::size_t n = bound.size();
  ExponentVector a(n);
  while (true) {
    visit(a);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (a[i] < bound[i]) {
        ++a[i];
        break;
      }
      a[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<ExponentVector> minimal_points_in_box(
    const ExponentVector& bound, const std::function<bool(const ExponentVector&)>& member) {
  std::vector<ExponentVector> found;
  for_each_in_box(bound, [&](const ExponentVector& a) {
    for (const auto& f : found) {
      if (f.divides(a)) return;
    }
    if (member(a)) found.push_back(a);
  });
  return found;
}

}  // namespace monoclosure

namespace monoclosure {

std::vector<std::size_t> support(const ExponentVector& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) s.push_back(i);
  }
  return s;
}

std::vector<std::size_t> support(const MonomialIdeal& I) {
  ExponentVector m = max_exponents(I);
  return support(m);
}

ExponentVector restrict_to(const ExponentVector& a, const std::vector<std::size_t>& idx) {
  ExponentVector r(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= a.size()) throw InputError("variable index out of range");
    r[k] = a[idx[k]];
  }
  return r;
}

ExponentVector embed(const ExponentVector& sub, std::size_t n, const std::vector<std::size_t>& idx) {
  if (sub.size() != idx.size()) throw InputError("embedding length mismatch");
  ExponentVector r(n);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= n) throw InputError("variable index out of range");
    r[idx[k]] = sub[k];
  }
  return r;
}

MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<std::size_t>& idx) {
  std::vector<std::string> names;
  for (auto i : idx) {
    if (i >= I.num_vars()) throw InputError("variable index out of range");
    names.push_back(I.vars()[i]);
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : I.generators()) {
    ExponentVector r = restrict_to(g, idx);
    if (r.total_degree() != g.total_degree()) {
      throw InputError("a generator involves variables outside the subring");
    }
    gens.push_back(std::move(r));
  }
  return MonomialIdeal(std::move(names), std::move(gens));
}

MonomialIdeal extend_to(const MonomialIdeal& sub, const std::vector<std::string>& vars,
                        const std::vector<std::size_t>& idx) {
  std::vector<ExponentVector> gens;
  for (const auto& g : sub.generators()) gens.push_back(embed(g, vars.size(), idx));
  return MonomialIdeal(vars, std::move(gens));
}

}  // namespace monoclosure
