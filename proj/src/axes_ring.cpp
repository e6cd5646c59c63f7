#include "monoclosure/axes_ring.hpp"

#include <optional>
#include <random>

namespace monoclosure {

namespace {

void require_spec(const GluedRingSpec& a, const GluedRingSpec& b) {
  if (!(a == b)) throw InputError("elements belong to different glued rings");
}

void validate(const GluedRingSpec& spec) {
  if (spec.branches == 0) throw InputError("a glued ring needs at least one branch");
  if (spec.truncation < 1) throw InputError("truncation order must be positive");
}

}  // namespace

AxesRingElement::AxesRingElement(GluedRingSpec spec)
    : spec_(spec),
      constant_(0),
      branches_(spec.branches, std::vector<Rational>(spec.truncation > 0 ? spec.truncation - 1 : 0,
                                                     Rational(0))) {
  validate(spec);
}

AxesRingElement AxesRingElement::constant(GluedRingSpec spec, Rational c) {
  AxesRingElement e(spec);
  e.constant_ = std::move(c);
  return e;
}

AxesRingElement AxesRingElement::uniformizer(GluedRingSpec spec, std::size_t branch,
                                             std::size_t degree) {
  AxesRingElement e(spec);
  if (degree == 0) throw InputError("uniformizer power must be positive");
  if (branch >= spec.branches) throw InputError("branch index out of range");
  if (degree < spec.truncation) e.branches_[branch][degree - 1] = 1;
  return e;
}

const Rational& AxesRingElement::coefficient(std::size_t branch, std::size_t degree) const {
  if (degree == 0) return constant_;
  if (branch >= spec_.branches || degree >= spec_.truncation) {
    throw InputError("coefficient index out of range");
  }
  return branches_[branch][degree - 1];
}

void AxesRingElement::set_coefficient(std::size_t branch, std::size_t degree, Rational value) {
  if (degree == 0) {
    constant_ = std::move(value);
    return;
  }
  if (branch >= spec_.branches || degree >= spec_.truncation) {
    throw InputError("coefficient index out of range");
  }
  branches_[branch][degree - 1] = std::move(value);
}

bool AxesRingElement::is_zero() const {
  if (constant_ != 0) return false;
  for (const auto& b : branches_) {
    for (const auto& c : b) {
      if (c != 0) return false;
    }
  }
  return true;
}

std::vector<Rational> AxesRingElement::coordinates() const {
  std::vector<Rational> v;
  v.reserve(1 + spec_.branches * (spec_.truncation - 1));
  v.push_back(constant_);
  for (const auto& b : branches_) v.insert(v.end(), b.begin(), b.end());
  return v;
}

std::string AxesRingElement::to_string() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& mono) {
    if (c == 0) return;
    std::string cs = monoclosure::to_string(c);
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        cs = monoclosure::to_string(Rational(-c));
      } else {
        out += " + ";
      }
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else if (cs == "-1") {
      out += "-" + mono;
    } else {
      out += cs + "*" + mono;
    }
  };
  append(constant_, "");
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    for (std::size_t k = 0; k < branches_[i].size(); ++k) {
      std::string mono = "t" + std::to_string(i + 1);
      if (k > 0) mono += "^" + std::to_string(k + 1);
      append(branches_[i][k], mono);
    }
  }
  return out.empty() ? "0" : out;
}

AxesRingElement& AxesRingElement::operator+=(const AxesRingElement& o) {
  require_spec(spec_, o.spec_);
  constant_ += o.constant_;
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    for (std::size_t k = 0; k < branches_[i].size(); ++k) branches_[i][k] += o.branches_[i][k];
  }
  return *this;
}

AxesRingElement& AxesRingElement::operator-=(const AxesRingElement& o) {
  require_spec(spec_, o.spec_);
  constant_ -= o.constant_;
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    for (std::size_t k = 0; k < branches_[i].size(); ++k) branches_[i][k] -= o.branches_[i][k];
  }
  return *this;
}

AxesRingElement& AxesRingElement::operator*=(const Rational& s) {
  constant_ *= s;
  for (auto& b : branches_) {
    for (auto& c : b) c *= s;
  }
  return *this;
}

AxesRingElement operator+(AxesRingElement a, const AxesRingElement& b) { return a += b; }
AxesRingElement operator-(AxesRingElement a, const AxesRingElement& b) { return a -= b; }
AxesRingElement operator*(AxesRingElement a, const Rational& s) { return a *= s; }

AxesRingElement operator*(const AxesRingElement& a, const AxesRingElement& b) {
  require_spec(a.spec(), b.spec());
  const auto& spec = a.spec();
  AxesRingElement r(spec);
  r.set_constant(a.constant_term() * b.constant_term());
  const std::size_t N = spec.truncation;
  for (std::size_t i = 0; i < spec.branches; ++i) {
    // On branch i both factors are power series in t_i; mixed-branch
    // products of positive-degree parts vanish.
    for (std::size_t d = 1; d < N; ++d) {
      Rational c = 0;
      for (std::size_t k = 0; k <= d; ++k) {
        const Rational& x = a.coefficient(i, k);
        if (x == 0) continue;
        const Rational& y = b.coefficient(i, d - k);
        if (y != 0) c += x * y;
      }
      r.set_coefficient(i, d, std::move(c));
    }
  }
  return r;
}

AxesRingElement pow(const AxesRingElement& a, Exponent k) {
  AxesRingElement result = AxesRingElement::constant(a.spec(), Rational(1));
  AxesRingElement base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

AxesRingElement substitute(const std::vector<AxesRingElement>& images, const ExponentVector& m) {
  if (images.size() != m.size()) throw InputError("one image per variable is required");
  if (images.empty()) throw InputError("substitution needs at least one image");
  const auto& spec = images.front().spec();
  AxesRingElement r = AxesRingElement::constant(spec, Rational(1));
  for (std::size_t i = 0; i < m.size(); ++i) {
    require_spec(spec, images[i].spec());
    if (m[i] > 0) r = r * pow(images[i], m[i]);
  }
  return r;
}

AxesRingElement substitute(const std::vector<AxesRingElement>& images, const Polynomial& f) {
  if (images.empty()) throw InputError("substitution needs at least one image");
  AxesRingElement r(images.front().spec());
  for (const auto& term : f) r += substitute(images, term.exponents) * term.coefficient;
  return r;
}

namespace {

/// Incremental row-echelon basis of a subspace of Q^d.
class EchelonBasis {
 public:
  /// Reduces v against the basis; returns the residual.
  std::vector<Rational> reduce(std::vector<Rational> v) const {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Rational& f = v[pivots_[b]];
      if (f == 0) continue;
      Rational factor = f;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (rows_[b][j] != 0) v[j] -= factor * rows_[b][j];
      }
    }
    return v;
  }

  void add(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::optional<std::size_t> p;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        p = j;
        break;
      }
    }
    if (!p) return;
    Rational lead = v[*p];
    for (auto& x : v) {
      if (x != 0) x /= lead;
    }
    // Keep the basis fully reduced so reduce() can use a single pass.
    for (auto& row : rows_) {
      Rational f = row[*p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) row[j] -= f * v[j];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(*p);
  }

  static bool is_zero(const std::vector<Rational>& v) {
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

bool ideal_member(const AxesRingElement& f, const std::vector<AxesRingElement>& gens) {
  const auto& spec = f.spec();
  if (spec.truncation < 2) throw InputError("ideal membership needs truncation order N >= 2");
  EchelonBasis basis;
  for (const auto& g : gens) {
    require_spec(spec, g.spec());
    basis.add(g.coordinates());
    for (std::size_t i = 0; i < spec.branches; ++i) {
      for (std::size_t k = 1; k < spec.truncation; ++k) {
        basis.add((AxesRingElement::uniformizer(spec, i, k) * g).coordinates());
      }
    }
  }
  return EchelonBasis::is_zero(basis.reduce(f.coordinates()));
}

ProductElement::ProductElement(GluedRingSpec spec)
    : spec_(spec), coeffs_(spec.branches, std::vector<Rational>(spec.truncation, Rational(0))) {
  validate(spec);
}

bool ProductElement::is_glued() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i][0] != coeffs_[0][0]) return false;
  }
  return true;
}

ProductElement operator*(const ProductElement& a, const ProductElement& b) {
  require_spec(a.spec(), b.spec());
  ProductElement r(a.spec());
  const std::size_t N = a.spec().truncation;
  for (std::size_t i = 0; i < a.spec().branches; ++i) {
    for (std::size_t d = 0; d < N; ++d) {
      Rational c = 0;
      for (std::size_t k = 0; k <= d; ++k) c += a.at(i, k) * b.at(i, d - k);
      r.at(i, d) = c;
    }
  }
  return r;
}

SeminormalityReport seminormality_probe(GluedRingSpec spec, std::size_t samples, std::uint64_t seed) {
  if (spec.truncation < 4) throw InputError("seminormality probe needs truncation N >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> pattern(0, 3);
  auto random_rational = [&] { return Rational(num(rng), den(rng)); };

  SeminormalityReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    ProductElement v(spec);
    Rational alpha = random_rational();
    if (alpha == 0) alpha = 1;
    for (std::size_t i = 0; i < spec.branches; ++i) {
      // Constants are biased toward ±alpha and 0 so that v², v³ are often glued.
      switch (pattern(rng)) {
        case 0: v.at(i, 0) = alpha; break;
        case 1: v.at(i, 0) = -alpha; break;
        case 2: v.at(i, 0) = 0; break;
        default: v.at(i, 0) = random_rational(); break;
      }
      for (std::size_t k = 1; k < spec.truncation; ++k) v.at(i, k) = random_rational();
    }
    ++report.samples;
    ProductElement sq = v * v;
    ProductElement cube = sq * v;
    if (sq.is_glued() && cube.is_glued()) {
      ++report.square_and_cube_glued;
      if (!v.is_glued()) ++report.violations;
    }
  }
  return report;
}

}  // namespace monoclosure
