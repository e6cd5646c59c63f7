#include "monoclosure/lp.hpp"

#include <optional>

namespace monoclosure::lp {

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }

  void set_objective(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_.assign(num_cols(), Rational(0));
    value_ = 0;
    for (std::size_t j = 0; j < num_cols(); ++j) reduced_[j] = cost_[j];
    for (std::size_t i = 0; i < num_rows(); ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < num_cols(); ++j) {
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
      }
      value_ += cb * rows_[i].back();
    }
  }

  /// Runs simplex iterations on the current objective, entering only columns
  /// below `col_limit`. Returns false when unbounded.
  bool optimize(std::size_t col_limit) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < col_limit; ++j) {
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < num_rows(); ++i) {
        const Rational& a = rows_[i][*enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i].back() / a;
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational p = rows_[r][c];
    auto& pr = rows_[r];
    for (auto& v : pr) {
      if (v != 0) v /= p;
    }
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j < pr.size(); ++j) {
        if (pr[j] != 0) rows_[i][j] -= f * pr[j];
      }
    }
    if (reduced_[c] != 0) {
      Rational f = reduced_[c];
      for (std::size_t j = 0; j < num_cols(); ++j) {
        if (pr[j] != 0) reduced_[j] -= f * pr[j];
      }
      value_ += f * pr.back();
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void truncate_columns(std::size_t keep) {
    for (auto& row : rows_) {
      Rational rhs = row.back();
      row.resize(keep);
      row.push_back(rhs);
    }
  }

  const Rational& value() const { return value_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
  Rational value_;
};

}  // namespace

Solution maximize(const LinearProgram& lp) {
  const std::size_t m = lp.A.size();
  const std::size_t n = lp.c.size();
  if (lp.b.size() != m) throw InputError("lp: row count mismatch");

  std::vector<std::vector<Rational>> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.A[i].size() != n) throw InputError("lp: column count mismatch");
    rows[i] = lp.A[i];
    rows[i].push_back(lp.b[i]);
    if (lp.b[i] < 0) {
      for (auto& v : rows[i]) v = -v;
    }
  }

  // Reuse identity columns of A as the starting basis; add artificials for the
  // remaining rows.
  std::vector<std::optional<std::size_t>> natural(m);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> one_row;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      const Rational& v = rows[i][j];
      if (v == 0) continue;
      if (v == 1 && !one_row) {
        one_row = i;
      } else {
        unit = false;
      }
    }
    if (unit && one_row && !natural[*one_row]) natural[*one_row] = j;
  }
  std::size_t artificials = 0;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!natural[i]) ++artificials;
  }
  const std::size_t total = n + artificials;
  std::size_t next_art = n;
  for (std::size_t i = 0; i < m; ++i) {
    Rational rhs = rows[i].back();
    rows[i].pop_back();
    rows[i].resize(total, Rational(0));
    if (natural[i]) {
      basis[i] = *natural[i];
    } else {
      rows[i][next_art] = 1;
      basis[i] = next_art++;
    }
    rows[i].push_back(rhs);
  }

  Tableau tab(std::move(rows), std::move(basis));
  if (artificials > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = n; j < total; ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize(total);
    if (tab.value() < 0) return Solution{Status::Infeasible, Rational(0), {}};
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < tab.num_rows();) {
      if (tab.basis()[i] < n) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n; ++j) {
        if (tab.rows()[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.drop_row(i);
      }
    }
    tab.truncate_columns(n);
  }

  tab.set_objective(lp.c);
  if (!tab.optimize(n)) return Solution{Status::Unbounded, Rational(0), {}};

  Solution sol{Status::Optimal, tab.value(), std::vector<Rational>(n, Rational(0))};
  for (std::size_t i = 0; i < tab.num_rows(); ++i) sol.x[tab.basis()[i]] = tab.rows()[i].back();
  return sol;
}

}  // namespace monoclosure::lp
