#include "monoclosure/polyhedra.hpp"

#include <algorithm>
#include <mutex>

#include "monoclosure/lp.hpp"

namespace monoclosure {

namespace {

Integer gcd_of(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

/// Dynamic bitset over constraint indices.
class ConstraintSet {
 public:
  explicit ConstraintSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  ConstraintSet operator&(const ConstraintSet& o) const {
    ConstraintSet r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool contains_all(const ConstraintSet& o) const {
    for (std::size_t i = 0; i < o.words_.size(); ++i) {
      std::uint64_t mine = i < words_.size() ? words_[i] : 0;
      if ((o.words_[i] & ~mine) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<Integer> y;  // (w_1..w_n, d): the inequality w·x + d·s >= 0
  ConstraintSet tight;
};

Integer eval(const std::vector<Integer>& h, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0 && y[i] != 0) s += h[i] * y[i];
  }
  return s;
}

void normalize(std::vector<Integer>& y) {
  Integer g = gcd_of(y);
  if (g > 1) {
    for (auto& x : y) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

Weight::Weight(std::vector<Integer> w) : w_(std::move(w)) {
  if (w_.empty()) throw InputError("weight must have at least one entry");
  for (const auto& x : w_) {
    if (x < 0) throw InputError("weight entries must be nonnegative");
  }
  Integer g = gcd_of(w_);
  if (g == 0) throw InputError("weight must be nonzero");
  if (g != 1) throw InputError("weight must be primitive (gcd 1)");
}

Weight Weight::primitive(std::vector<Integer> w) {
  Integer g = gcd_of(w);
  if (g == 0) throw InputError("weight must be nonzero");
  for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return Weight(std::move(w));
}

Integer Weight::value(const ExponentVector& a) const {
  if (a.size() != w_.size()) throw InputError("weight and monomial lengths differ");
  Integer s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (a[i] != 0 && w_[i] != 0) s += w_[i] * Integer(static_cast<unsigned long>(a[i]));
  }
  return s;
}

Rational Weight::value(const std::vector<Rational>& p) const {
  if (p.size() != w_.size()) throw InputError("weight and point lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] != 0) s += Rational(w_[i]) * p[i];
  }
  return s;
}

std::vector<Facet> compute_facets(std::size_t n, const std::vector<ExponentVector>& points) {
  if (points.empty()) throw DomainError("empty polyhedron has no facets");
  const std::size_t D = n + 1;
  auto to_int = [](Exponent e) { return Integer(static_cast<unsigned long>(e)); };

  // Constraints in processing order: orthant rays (e_i, 0), then (p, 1).
  std::vector<std::vector<Integer>> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> h(D, 0);
    h[i] = 1;
    constraints.push_back(std::move(h));
  }
  for (const auto& p : points) {
    if (p.size() != n) throw InputError("point dimension mismatch");
    std::vector<Integer> h(D, 0);
    for (std::size_t i = 0; i < n; ++i) h[i] = to_int(p[i]);
    h[n] = 1;
    constraints.push_back(std::move(h));
  }

  // The first n + 1 constraints are linearly independent; their cone is
  // simplicial with rays (e_i, -p1_i) and (0, 1).
  std::vector<Ray> rays;
  const auto& p1 = points.front();
  for (std::size_t i = 0; i <= n; ++i) {
    Ray r;
    r.y.assign(D, 0);
    if (i < n) {
      r.y[i] = 1;
      r.y[n] = -to_int(p1[i]);
    } else {
      r.y[n] = 1;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (eval(constraints[k], r.y) == 0) r.tight.set(k);
    }
    rays.push_back(std::move(r));
  }

  for (std::size_t k = n + 1; k < constraints.size(); ++k) {
    const auto& h = constraints[k];
    std::vector<Integer> vals;
    vals.reserve(rays.size());
    for (const auto& r : rays) vals.push_back(eval(h, r.y));

    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0) pos.push_back(i);
      else if (vals[i] < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] >= 0) {
        Ray r = rays[i];
        if (vals[i] == 0) r.tight.set(k);
        next.push_back(std::move(r));
      }
    }
    for (auto ip : pos) {
      for (auto in : neg) {
        ConstraintSet common = rays[ip].tight & rays[in].tight;
        if (common.count() + 2 < D) continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == ip || t == in) continue;
          if (rays[t].tight.contains_all(common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r;
        r.y.resize(D);
        for (std::size_t j = 0; j < D; ++j) {
          r.y[j] = vals[ip] * rays[in].y[j] - vals[in] * rays[ip].y[j];
        }
        normalize(r.y);
        r.tight = common;
        r.tight.set(k);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> out;
  for (const auto& r : rays) {
    std::vector<Integer> w(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(n));
    Integer g = gcd_of(w);
    if (g == 0) continue;  // s >= 0, the face at infinity
    Rational c(-r.y[n], g);
    c.canonicalize();
    out.push_back(Facet{Weight::primitive(std::move(w)), c});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct NewtonPolyhedron::FacetCache {
  std::once_flag once;
  std::vector<Facet> facets;
};

NewtonPolyhedron::NewtonPolyhedron(std::size_t dimension, std::vector<ExponentVector> vpoints)
    : dim_(dimension), vpoints_(std::move(vpoints)), cache_(std::make_shared<FacetCache>()) {
  if (vpoints_.empty()) throw DomainError("Newton polyhedron of the zero ideal is empty");
  for (const auto& p : vpoints_) {
    if (p.size() != dim_) throw InputError("point dimension mismatch");
  }
}

const std::vector<Facet>& NewtonPolyhedron::facets() const {
  std::call_once(cache_->once, [this] { cache_->facets = compute_facets(dim_, vpoints_); });
  return cache_->facets;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("Newton polyhedron of the zero ideal is empty");
  return NewtonPolyhedron(I.num_vars(), I.generators());
}

Integer ord(const Weight& w, const MonomialIdeal& I) {
  if (I.is_zero()) throw DomainError("order of the zero ideal is infinite");
  if (w.size() != I.num_vars()) throw InputError("weight length differs from variable count");
  std::optional<Integer> best;
  for (const auto& g : I.generators()) {
    Integer v = w.value(g);
    if (!best || v < *best) best = v;
  }
  return *best;
}

std::vector<Rational> to_rational(const ExponentVector& a) {
  std::vector<Rational> p;
  p.reserve(a.size());
  for (Exponent e : a) p.emplace_back(static_cast<unsigned long>(e));
  return p;
}

bool contains_point(const NewtonPolyhedron& np, const std::vector<Rational>& p) {
  if (p.size() != np.dimension()) throw InputError("point dimension mismatch");
  for (const auto& f : np.facets()) {
    if (f.w.value(p) < f.c) return false;
  }
  return true;
}

bool contains_point(const NewtonPolyhedron& np, const ExponentVector& a) {
  if (a.size() != np.dimension()) throw InputError("point dimension mismatch");
  for (const auto& f : np.facets()) {
    if (Rational(f.w.value(a)) < f.c) return false;
  }
  return true;
}

namespace {

Rational coord(const ExponentVector& v, std::size_t i) {
  return Rational(static_cast<unsigned long>(v[i]));
}

void check_points(std::size_t n, const std::vector<ExponentVector>& pts) {
  for (const auto& p : pts) {
    if (p.size() != n) throw InputError("point dimension mismatch");
  }
}

}  // namespace

std::optional<Rational> lp_max_scale(const std::vector<Rational>& a,
                                     const std::vector<ExponentVector>& P,
                                     const std::vector<ExponentVector>& Q) {
  if (P.empty() || Q.empty()) throw InputError("lp_max_scale needs nonempty point sets");
  const std::size_t n = a.size();
  check_points(n, P);
  check_points(n, Q);
  const std::size_t k = P.size(), l = Q.size();
  // Columns: lambda (k), nu (l), r (n), eps, s.
  const std::size_t cols = k + l + n + 2;
  const std::size_t eps = k + l + n, slack = eps + 1;
  lp::LinearProgram prog;
  prog.A.assign(n + 3, std::vector<Rational>(cols, Rational(0)));
  prog.b.assign(n + 3, Rational(0));
  prog.c.assign(cols, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) prog.A[i][j] = coord(P[j], i);
    for (std::size_t j = 0; j < l; ++j) prog.A[i][k + j] = coord(Q[j], i);
    prog.A[i][k + l + i] = 1;
    prog.b[i] = a[i];
  }
  for (std::size_t j = 0; j < k; ++j) prog.A[n][j] = 1;
  prog.b[n] = 1;
  for (std::size_t j = 0; j < l; ++j) prog.A[n + 1][k + j] = 1;
  prog.A[n + 1][eps] = -1;
  prog.A[n + 2][eps] = 1;
  prog.A[n + 2][slack] = 1;
  prog.b[n + 2] = 1;
  prog.c[eps] = 1;
  auto sol = lp::maximize(prog);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.value;
}

std::optional<Rational> lp_max_scale(const ExponentVector& a, const std::vector<ExponentVector>& P,
                                     const std::vector<ExponentVector>& Q) {
  return lp_max_scale(to_rational(a), P, Q);
}

bool lp_in_hull_plus_orthant(const std::vector<Rational>& a, const std::vector<ExponentVector>& P) {
  if (P.empty()) return false;
  const std::size_t n = a.size(), k = P.size();
  check_points(n, P);
  lp::LinearProgram prog;
  prog.A.assign(n + 1, std::vector<Rational>(k + n, Rational(0)));
  prog.b.assign(n + 1, Rational(0));
  prog.c.assign(k + n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) prog.A[i][j] = coord(P[j], i);
    prog.A[i][k + i] = 1;
    prog.b[i] = a[i];
  }
  for (std::size_t j = 0; j < k; ++j) prog.A[n][j] = 1;
  prog.b[n] = 1;
  return lp::maximize(prog).status == lp::Status::Optimal;
}

Rational lp_min_linear(const std::vector<Rational>& w, const std::vector<ExponentVector>& P) {
  if (P.empty()) throw InputError("lp_min_linear needs a nonempty point set");
  const std::size_t n = w.size(), k = P.size();
  check_points(n, P);
  // Variables: lambda (k), x (n). x = sum lambda p + r is encoded as
  // x_i - sum lambda_j p_ji - r_i = 0 with r as extra columns.
  lp::LinearProgram prog;
  const std::size_t cols = k + 2 * n;
  prog.A.assign(n + 1, std::vector<Rational>(cols, Rational(0)));
  prog.b.assign(n + 1, Rational(0));
  prog.c.assign(cols, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) prog.A[i][j] = -coord(P[j], i);
    prog.A[i][k + i] = 1;
    prog.A[i][k + n + i] = -1;
    prog.c[k + i] = -w[i];
  }
  for (std::size_t j = 0; j < k; ++j) prog.A[n][j] = 1;
  prog.b[n] = 1;
  auto sol = lp::maximize(prog);
  if (sol.status == lp::Status::Unbounded) throw DomainError("linear form is unbounded below");
  if (sol.status != lp::Status::Optimal) throw DomainError("empty point set");
  return -sol.value;
}

}  // namespace monoclosure
