#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monoclosure {

using Exponent = std::uint64_t;

/// A point of N^n, i.e. the exponent vector of a monomial. Arithmetic is
/// overflow-checked; an overflow raises DomainError instead of wrapping.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> init) : e_(init) {}
  explicit ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const std::vector<Exponent>& values() const noexcept { return e_; }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;
  Exponent total_degree() const;
  bool is_one() const noexcept;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector scaled(const ExponentVector& a, Exponent k);
/// Componentwise max(a - b, 0): the exponent of x^a : x^b.
ExponentVector monus(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector unit_vector(std::size_t n, std::size_t i);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// Divisibility-minimal elements of `gens`, sorted lexicographically.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

/// A monomial ideal over an ordered list of variable names, stored by its
/// minimal generators in lexicographic order. Structural equality is ideal
/// equality. The zero ideal has no generators; the unit ideal is generated by
/// the zero exponent vector.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> vars, std::vector<ExponentVector> gens);

  static MonomialIdeal zero(std::vector<std::string> vars);
  static MonomialIdeal unit(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<ExponentVector> gens_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& I) const noexcept;
};

/// Canonical ideal from raw generators; throws InputError on a length mismatch.
MonomialIdeal make_ideal(std::vector<std::string> vars, std::vector<ExponentVector> raw_gens);

bool contains(const MonomialIdeal& I, const ExponentVector& m);
/// I ⊆ J.
bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, unsigned k);
MonomialIdeal colon(const MonomialIdeal& I, const ExponentVector& m);
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal radical(const MonomialIdeal& I);
/// All monomial primes: the zero ideal first, then the ideals of each nonempty
/// variable subset in increasing binary order of the subset mask.
std::vector<MonomialIdeal> monomial_primes(const std::vector<std::string>& vars);
/// I : x_i^∞, which sets the i-th exponent of every generator to 0.
MonomialIdeal saturate_variable(const MonomialIdeal& I, std::size_t i);
/// Ideal generated by x^m times the generators of I.
MonomialIdeal multiply(const MonomialIdeal& I, const ExponentVector& m);

/// Largest i-th exponent among the generators, per variable.
ExponentVector max_exponents(const MonomialIdeal& I);

/// Minimal generators of the up-closed set of points in the box
/// 0 <= a <= bound satisfying `member`. `member` must be up-closed within the
/// box; points above an accepted point are not re-tested.
std::vector<ExponentVector> minimal_points_in_box(
    const ExponentVector& bound, const std::function<bool(const ExponentVector&)>& member);

/// Visit every lattice point of the box 0 <= a <= bound in lexicographic order.
void for_each_in_box(const ExponentVector& bound,
                     const std::function<void(const ExponentVector&)>& visit);

/// Variables on which some generator has a positive exponent.
std::vector<std::size_t> support(const MonomialIdeal& I);
std::vector<std::size_t> support(const ExponentVector& m);

/// Coordinates `idx` of `a`, in the given order.
ExponentVector restrict_to(const ExponentVector& a, const std::vector<std::size_t>& idx);
/// The vector of length n with `sub[k]` at position idx[k] and zeros elsewhere.
ExponentVector embed(const ExponentVector& sub, std::size_t n, const std::vector<std::size_t>& idx);
/// I viewed in the subring on variables `idx`; InputError if some generator
/// involves a variable outside `idx`.
MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<std::size_t>& idx);
/// Extension of a subring ideal to the ring on `vars`.
MonomialIdeal extend_to(const MonomialIdeal& sub, const std::vector<std::string>& vars,
                        const std::vector<std::size_t>& idx);

void require_same_ambient(const MonomialIdeal& I, const MonomialIdeal& J);
void require_length(const MonomialIdeal& I, const ExponentVector& m);

}  // namespace monoclosure
