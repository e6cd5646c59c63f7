#include "monoclosure/structure.hpp"

#include <algorithm>
#include <numeric>

#include "monoclosure/closures.hpp"
#include "monoclosure/text_io.hpp"

namespace monoclosure {

SeparatingFunctional separating_functional(const MonomialIdeal& A, const ExponentVector& mu) {
  require_length(A, mu);
  if (contains(natural_closure(A), mu)) {
    throw DomainError("mu lies in the natural closure; no supporting hyperplane passes through it");
  }
  if (!is_naturally_closed(A)) throw DomainError("the ideal is not naturally closed");
  std::vector<ExponentVector> pts = A.generators();
  pts.push_back(mu);
  std::optional<SeparatingFunctional> best;
  for (const auto& f : compute_facets(A.num_vars(), pts)) {
    if (f.c <= 0 || Rational(f.w.value(mu)) != f.c) continue;
    if (!best || f.w < best->w) best = SeparatingFunctional{f.w, f.c};
  }
  if (!best) throw DomainError("no supporting hyperplane with positive offset passes through mu");
  return *best;
}

std::vector<ExponentVector> monomials_up_to_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  ExponentVector box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = d;
  for_each_in_box(box, [&](const ExponentVector& a) {
    if (a.total_degree() <= d) out.push_back(a);
  });
  std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
    auto da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : b < a;
  });
  return out;
}

namespace {

MonomialIdeal variables_ideal(const std::vector<std::string>& vars) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < vars.size(); ++i) gens.push_back(unit_vector(vars.size(), i));
  return MonomialIdeal(vars, std::move(gens));
}

}  // namespace

MonomialIdeal maximal_naturally_closed_excluding(const std::vector<std::string>& vars,
                                                 const ExponentVector& mu, unsigned box_degree) {
  if (mu.size() != vars.size()) throw InputError("mu length differs from the variable count");
  if (mu.is_one()) return variables_ideal(vars);
  MonomialIdeal current = MonomialIdeal::zero(vars);
  for (const auto& rho : monomials_up_to_degree(vars.size(), box_degree)) {
    if (contains(current, rho)) continue;
    MonomialIdeal candidate = natural_closure(sum(current, MonomialIdeal(vars, {rho})));
    if (!contains(candidate, mu)) current = std::move(candidate);
  }
  return current;
}

bool is_maximal_excluding_within_box(const MonomialIdeal& I, const ExponentVector& mu,
                                     unsigned box_degree) {
  if (contains(natural_closure(I), mu)) return false;
  for (const auto& rho : monomials_up_to_degree(I.num_vars(), box_degree)) {
    if (contains(I, rho)) continue;
    if (!contains(natural_closure(sum(I, MonomialIdeal(I.vars(), {rho}))), mu)) return false;
  }
  return true;
}

namespace {

struct Failure {
  std::string what;
};

/// Minimal generators of {λ : w·λ >= c} \ {ν} over the variables of `w`.
MonomialIdeal threshold_ideal_without(const std::vector<std::string>& vars, const Weight& w,
                                      const Rational& c, const ExponentVector& nu) {
  // w > 0 on every coordinate here, so each coordinate is bounded.
  std::vector<ExponentVector> gens;
  ExponentVector box(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    Integer top = ceil_div(c / Rational(w[i]));
    box[i] = top.get_ui();
  }
  auto members = minimal_points_in_box(box, [&](const ExponentVector& a) {
    return Rational(w.value(a)) >= c;
  });
  for (auto& g : members) {
    if (g == nu) {
      for (std::size_t i = 0; i < vars.size(); ++i) gens.push_back(nu + unit_vector(vars.size(), i));
    } else {
      gens.push_back(std::move(g));
    }
  }
  return MonomialIdeal(vars, std::move(gens));
}

std::string block_label(const std::vector<std::string>& vars) {
  std::string s = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + "}";
}

// `A` lives in the subring on `idx` (ambient indices); `mu` is over the same
// variables.
std::vector<StructureBlock> decompose(const MonomialIdeal& A, const ExponentVector& mu,
                                      const std::vector<std::size_t>& idx, unsigned box) {
  const auto& vars = A.vars();
  const std::string where = " in " + block_label(vars);
  if (!is_naturally_closed(A)) throw Failure{"ideal " + format_ideal(A) + " is not naturally closed" + where};
  if (contains(A, mu)) throw Failure{"ideal " + format_ideal(A) + " contains mu" + where};

  if (mu.is_one()) {
    if (A != variables_ideal(vars)) {
      throw Failure{"mu = 1 but " + format_ideal(A) + " is not the ideal of all variables" + where};
    }
    return {StructureBlock{idx, mu, A}};
  }

  std::vector<std::size_t> all(vars.size());
  std::iota(all.begin(), all.end(), 0);
  if (is_primary_to(A, all)) {
    if (!is_maximal_excluding_within_box(A, mu, box)) {
      throw Failure{"primary component " + format_ideal(A) + " is not maximal excluding " +
                    format_monomial(mu, vars) + " up to degree " + std::to_string(box) + where};
    }
    return {StructureBlock{idx, mu, A}};
  }

  SeparatingFunctional sep = separating_functional(A, mu);
  std::vector<std::size_t> first, rest;
  for (std::size_t i = 0; i < vars.size(); ++i) (sep.w[i] > 0 ? first : rest).push_back(i);
  if (rest.empty()) {
    throw Failure{"separating functional has full support but " + format_ideal(A) +
                  " is not primary" + where};
  }

  ExponentVector nu = restrict_to(mu, first);
  ExponentVector theta = restrict_to(mu, rest);
  std::vector<std::string> first_vars, rest_vars;
  for (auto i : first) first_vars.push_back(vars[i]);
  for (auto i : rest) rest_vars.push_back(vars[i]);
  std::vector<Integer> w_first;
  for (auto i : first) w_first.push_back(sep.w[i]);
  MonomialIdeal I = threshold_ideal_without(first_vars, Weight(std::move(w_first)), sep.c, nu);

  if (!is_naturally_closed(I)) throw Failure{"first block " + format_ideal(I) + " is not naturally closed"};
  if (!is_maximal_excluding_within_box(I, nu, box)) {
    throw Failure{"first block " + format_ideal(I) + " is not maximal excluding " +
                  format_monomial(nu, first_vars) + " up to degree " + std::to_string(box)};
  }

  // J: monomials in the remaining variables whose product with ν lies in A.
  MonomialIdeal quotient = colon(A, embed(nu, vars.size(), first));
  std::vector<ExponentVector> j_gens;
  for (const auto& g : quotient.generators()) {
    bool in_rest = std::all_of(first.begin(), first.end(), [&](std::size_t i) { return g[i] == 0; });
    if (in_rest) j_gens.push_back(restrict_to(g, rest));
  }
  MonomialIdeal J(rest_vars, std::move(j_gens));

  MonomialIdeal rebuilt = sum(extend_to(I, vars, first),
                              multiply(extend_to(J, vars, rest), embed(nu, vars.size(), first)));
  if (rebuilt != A) {
    throw Failure{format_ideal(A) + " differs from I + nu*J = " + format_ideal(rebuilt) + where};
  }

  std::vector<std::size_t> first_ambient, rest_ambient;
  for (auto i : first) first_ambient.push_back(idx[i]);
  for (auto i : rest) rest_ambient.push_back(idx[i]);
  std::vector<StructureBlock> blocks{StructureBlock{first_ambient, nu, I}};
  auto tail = decompose(J, theta, rest_ambient, box);
  blocks.insert(blocks.end(), tail.begin(), tail.end());
  return blocks;
}

}  // namespace

DecompositionReport verify_decomposition(const MonomialIdeal& A, const ExponentVector& mu,
                                         unsigned box_degree) {
  require_length(A, mu);
  std::vector<std::size_t> idx(A.num_vars());
  std::iota(idx.begin(), idx.end(), 0);
  try {
    StructureDecomposition d{decompose(A, mu, idx, box_degree), box_degree};
    ExponentVector product_of_parts(A.num_vars());
    for (const auto& b : d.blocks) product_of_parts = product_of_parts + embed(b.mu, A.num_vars(), b.vars);
    if (product_of_parts != mu) return {std::nullopt, "block monomials do not multiply to mu"};
    if (recompose(d, A.vars()) != A) return {std::nullopt, "recomposed ideal differs from the input"};
    return {std::move(d), ""};
  } catch (const Failure& f) {
    return {std::nullopt, f.what};
  } catch (const DomainError& e) {
    return {std::nullopt, e.what()};
  }
}

MonomialIdeal recompose(const StructureDecomposition& d, const std::vector<std::string>& vars) {
  MonomialIdeal total = MonomialIdeal::zero(vars);
  ExponentVector prefix(vars.size());
  for (const auto& b : d.blocks) {
    total = sum(total, multiply(extend_to(b.component, vars, b.vars), prefix));
    prefix = prefix + embed(b.mu, vars.size(), b.vars);
  }
  return total;
}

}  // namespace monoclosure
