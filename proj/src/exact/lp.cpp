#include "tensamp/exact/lp.hpp"

#include <stdexcept>

namespace tensamp {

namespace {

// Dense tableau kept in canonical form with respect to `basis`.
class Tableau {
 public:
  Tableau(RatMat rows, std::vector<std::size_t> basis)
      : t_(std::move(rows)), basis_(std::move(basis)), allowed_(t_.cols() - 1, true) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t vars() const { return t_.cols() - 1; }
  const Rat& rhs(std::size_t r) const { return t_(r, vars()); }
  const Rat& at(std::size_t r, std::size_t c) const { return t_(r, c); }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  void forbid(std::size_t col) { allowed_[col] = false; }

  // Runs Bland-rule pivots until optimal or unbounded for max c.z.
  LpStatus maximize(const RatVec& c) {
    for (;;) {
      std::size_t entering = vars();
      for (std::size_t j = 0; j < vars(); ++j) {
        if (!allowed_[j] || is_basic(j)) continue;
        Rat reduced = c[j];
        for (std::size_t r = 0; r < rows(); ++r) {
          if (!t_(r, j).is_zero()) reduced -= c[basis_[r]] * t_(r, j);
        }
        if (reduced.sign() > 0) {
          entering = j;
          break;
        }
      }
      if (entering == vars()) return LpStatus::Optimal;

      std::size_t leaving = rows();
      Rat best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (t_(r, entering).sign() <= 0) continue;
        Rat ratio = rhs(r) / t_(r, entering);
        if (leaving == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows()) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = Rat(1) / t_(row, col);
    for (std::size_t k = 0; k < t_.cols(); ++k) t_(row, k) *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row || t_(r, col).is_zero()) continue;
      const Rat f = t_(r, col);
      for (std::size_t k = 0; k < t_.cols(); ++k) {
        if (!t_(row, k).is_zero()) t_(r, k) -= f * t_(row, k);
      }
    }
    basis_[row] = col;
  }

  void drop_rows(const std::vector<bool>& drop) {
    std::size_t kept = 0;
    for (bool d : drop) kept += d ? 0 : 1;
    RatMat next(kept, t_.cols());
    std::vector<std::size_t> next_basis;
    std::size_t out = 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (drop[r]) continue;
      for (std::size_t k = 0; k < t_.cols(); ++k) next(out, k) = t_(r, k);
      next_basis.push_back(basis_[r]);
      ++out;
    }
    t_ = std::move(next);
    basis_ = std::move(next_basis);
  }

  RatVec values(std::size_t count) const {
    RatVec z(count);
    for (std::size_t r = 0; r < rows(); ++r) {
      if (basis_[r] < count) z[basis_[r]] = rhs(r);
    }
    return z;
  }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  RatMat t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
};

}  // namespace

LpSolution simplex_maximize(const RatMat& a, const RatVec& b, const RatVec& c) {
  if (a.rows() != b.dim() || a.cols() != c.dim()) throw UsageError("simplex_maximize: shape mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Phase one: artificial column per row, rows flipped so rhs >= 0.
  RatMat t(m, n + m + 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t(r, j) = flip ? -a(r, j) : a(r, j);
    t(r, n + r) = 1;
    t(r, n + m) = flip ? -b[r] : b[r];
    basis[r] = n + r;
  }
  Tableau tab(std::move(t), std::move(basis));
  RatVec phase1(n + m);
  for (std::size_t r = 0; r < m; ++r) phase1[n + r] = -1;
  tab.maximize(phase1);
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basic(r) >= n && tab.rhs(r).sign() != 0) return {LpStatus::Infeasible, RatVec(n), Rat(0)};
  }

  // Drive remaining (zero-valued) artificials out of the basis.
  std::vector<bool> redundant(tab.rows(), false);
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    if (tab.basic(r) < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!tab.at(r, j).is_zero()) {
        col = j;
        break;
      }
    }
    if (col == n) {
      redundant[r] = true;
    } else {
      tab.pivot(r, col);
    }
  }
  tab.drop_rows(redundant);
  for (std::size_t j = n; j < n + m; ++j) tab.forbid(j);

  RatVec phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (tab.maximize(phase2) == LpStatus::Unbounded) return {LpStatus::Unbounded, tab.values(n), Rat(0)};
  RatVec z = tab.values(n);
  Rat objective = c.dot(z);
  return {LpStatus::Optimal, std::move(z), std::move(objective)};
}

bool satisfies_all(const std::vector<LinearConstraint>& constraints, const RatVec& x) {
  for (const auto& con : constraints) {
    const Rat lhs = con.coeffs.dot(x);
    switch (con.relation) {
      case Relation::GreaterEqual:
        if (lhs < con.rhs) return false;
        break;
      case Relation::Greater:
        if (lhs <= con.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != con.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_infeasibility(const std::vector<LinearConstraint>& constraints,
                          const FarkasCertificate& certificate) {
  if (certificate.multipliers.size() != constraints.size() || constraints.empty()) return false;
  const std::size_t dim = constraints.front().coeffs.dim();
  RatVec combo(dim);
  Rat rhs_total = 0;
  Rat strict_total = 0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Rat& y = certificate.multipliers[i];
    const auto& con = constraints[i];
    if (con.coeffs.dim() != dim) return false;
    if (con.relation != Relation::Equal && y.sign() < 0) return false;
    combo += con.coeffs * y;
    rhs_total += y * con.rhs;
    if (con.relation == Relation::Greater) strict_total += y;
  }
  if (!combo.is_zero()) return false;
  if (rhs_total.sign() < 0) return false;
  return rhs_total.sign() > 0 || strict_total.sign() > 0;
}

namespace {

FarkasCertificate find_certificate(std::size_t dim, const std::vector<LinearConstraint>& cons) {
  // Columns: per equality two (y+, y-), per inequality one, plus u >= 0.
  std::vector<std::size_t> first_col(cons.size());
  std::size_t cols = 0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    first_col[i] = cols;
    cols += cons[i].relation == Relation::Equal ? 2 : 1;
  }
  const std::size_t u_col = cols++;
  RatMat a(dim + 2, cols);
  RatVec b(dim + 2);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const auto& con = cons[i];
    const std::size_t c0 = first_col[i];
    const bool eq = con.relation == Relation::Equal;
    for (std::size_t k = 0; k < dim; ++k) {
      a(k, c0) = con.coeffs[k];
      if (eq) a(k, c0 + 1) = -con.coeffs[k];
    }
    a(dim, c0) = con.rhs;
    a(dim + 1, c0) = con.rhs;
    if (eq) {
      a(dim, c0 + 1) = -con.rhs;
      a(dim + 1, c0 + 1) = -con.rhs;
    }
    if (con.relation == Relation::Greater) a(dim + 1, c0) += 1;
  }
  a(dim, u_col) = -1;
  b[dim + 1] = 1;
  const LpSolution sol = simplex_maximize(a, b, RatVec(cols));
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("lp_feasible: neither a point nor a Farkas certificate was found");
  }
  FarkasCertificate cert;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    Rat y = sol.z[first_col[i]];
    if (cons[i].relation == Relation::Equal) y -= sol.z[first_col[i] + 1];
    cert.multipliers.push_back(std::move(y));
  }
  return cert;
}

}  // namespace

FeasibilityResult lp_feasible(std::size_t dim, const std::vector<LinearConstraint>& constraints) {
  if (constraints.empty()) return {RatVec(dim), std::nullopt};
  std::size_t strict = 0;
  std::size_t inequalities = 0;
  for (const auto& con : constraints) {
    if (con.coeffs.dim() != dim) throw UsageError("lp_feasible: constraint dimension mismatch");
    if (con.relation != Relation::Equal) ++inequalities;
    if (con.relation == Relation::Greater) ++strict;
  }

  // Columns: x+ (dim), x- (dim), one slack per inequality, then s and w if strict rows exist.
  const std::size_t slack0 = 2 * dim;
  const std::size_t s_col = slack0 + inequalities;
  const std::size_t cols = s_col + (strict ? 2 : 0);
  const std::size_t rows = constraints.size() + (strict ? 1 : 0);
  RatMat a(rows, cols);
  RatVec b(rows);
  std::size_t slack = slack0;
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& con = constraints[i];
    for (std::size_t k = 0; k < dim; ++k) {
      a(i, k) = con.coeffs[k];
      a(i, dim + k) = -con.coeffs[k];
    }
    if (con.relation != Relation::Equal) a(i, slack++) = -1;
    if (con.relation == Relation::Greater) a(i, s_col) = -1;
    b[i] = con.rhs;
  }
  RatVec objective(cols);
  if (strict) {
    a(constraints.size(), s_col) = 1;
    a(constraints.size(), s_col + 1) = 1;
    b[constraints.size()] = 1;
    objective[s_col] = 1;
  }
  const LpSolution sol = simplex_maximize(a, b, objective);
  if (sol.status == LpStatus::Optimal && (!strict || sol.z[s_col].sign() > 0)) {
    RatVec x(dim);
    for (std::size_t k = 0; k < dim; ++k) x[k] = sol.z[k] - sol.z[dim + k];
    return {std::move(x), std::nullopt};
  }
  return {std::nullopt, find_certificate(dim, constraints)};
}

}  // namespace tensamp
