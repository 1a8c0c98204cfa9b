#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <optional>
#include <cmath>
#include <numeric>
#include <random>

#include "tensamp/exact/linear.hpp"
#include "tensamp/exact/lp.hpp"
#include "tensamp/exact/rational.hpp"

using namespace tensamp;

namespace {

RatMat int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  RatMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(dist(rng));
  }
  return m;
}

// Leibniz expansion.
Rat leibniz(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Rat term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Cyclic Jacobi rotations on a double copy.
std::vector<double> jacobi_eigenvalues(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).raw().get_d();
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-14) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(a[i][i]);
  return out;
}

}  // namespace

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rat::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rat::parse("-0").str(), "0");
  EXPECT_EQ(Rat::parse("12").str(), "12");
  EXPECT_THROW(Rat::parse("4/-2"), ParseError);
  EXPECT_THROW(Rat::parse("-6/-4"), ParseError);
  EXPECT_THROW(Rat::parse("1/0"), ParseError);
  EXPECT_THROW(Rat::parse("x"), ParseError);
  EXPECT_THROW(Rat::parse(""), ParseError);
  EXPECT_THROW(Rat::parse("1.5"), ParseError);
}

TEST(Rational, FieldArithmetic) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (int i = 0; i < 200; ++i) {
    const Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rat(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ((a < b), (a - b).sign() < 0);
  }
}

TEST(Linear, DeterminantMatchesLeibniz) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    const RatMat m = int_matrix(rng, n, n, -4, 4);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Linear, SolveAndNullSpace) {
  std::mt19937 rng(13);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 4;
    const RatMat a = int_matrix(rng, rows, cols, -2, 2);
    const RatVec b = int_matrix(rng, rows, 1, -3, 3).column(0);
    const auto x = solve_linear(a, b);
    std::vector<RatVec> aug_cols;
    for (std::size_t c = 0; c < cols; ++c) aug_cols.push_back(a.column(c));
    const std::size_t ra = rank(a);
    aug_cols.push_back(b);
    const std::size_t rab = rank(RatMat::from_columns(aug_cols, rows));
    if (x) {
      EXPECT_EQ(a * *x, b);
    } else {
      EXPECT_GT(rab, ra);
    }
    const auto ns = null_space(a);
    EXPECT_EQ(ns.size(), cols - ra);
    for (const auto& v : ns) EXPECT_TRUE((a * v).is_zero());
  }
}

TEST(Linear, InertiaMatchesJacobiOnNonsingular) {
  std::mt19937 rng(17);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    const std::size_t n = 1 + t % 5;
    RatMat m = int_matrix(rng, n, n, -3, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    }
    if (determinant(m).is_zero()) continue;
    ++checked;
    const auto ev = jacobi_eigenvalues(m);
    const auto pos = static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [](double x) { return x > 0; }));
    const Inertia in = inertia(m);
    EXPECT_EQ(in.positive, pos);
    EXPECT_EQ(in.negative, n - pos);
    EXPECT_EQ(in.zero, 0u);
  }
  EXPECT_GE(checked, 40);
}

TEST(Linear, PrimitiveVector) {
  EXPECT_EQ((RatVec{Rat(2, 3), Rat(-4, 3)}.primitive()), (RatVec{1, -2}));
  EXPECT_EQ((RatVec{0, 0}.primitive()), (RatVec{0, 0}));
  EXPECT_THROW(RatVec({1, 2}) + RatVec({1}), UsageError);
}

// Small LPs in two variables over a box, against vertex enumeration.
TEST(Simplex, MatchesVertexEnumeration) {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> coef(-3, 3), rhs(0, 6);
  for (int t = 0; t < 60; ++t) {
    // rows: a.x <= b, plus x <= 5, y <= 5; x, y >= 0.
    std::vector<std::array<Rat, 3>> rows;
    for (int i = 0; i < 2; ++i) rows.push_back({Rat(coef(rng)), Rat(coef(rng)), Rat(rhs(rng))});
    rows.push_back({Rat(1), Rat(0), Rat(5)});
    rows.push_back({Rat(0), Rat(1), Rat(5)});
    const RatVec c{Rat(coef(rng)), Rat(coef(rng))};

    const std::size_t m = rows.size();
    RatMat a(m, 2 + m);
    RatVec b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a(i, 0) = rows[i][0];
      a(i, 1) = rows[i][1];
      a(i, 2 + i) = Rat(1);
      b[i] = rows[i][2];
    }
    RatVec cz(2 + m);
    cz[0] = c[0];
    cz[1] = c[1];
    const LpSolution sol = simplex_maximize(a, b, cz);
    ASSERT_EQ(sol.status, LpStatus::Optimal);  // the origin is feasible and the box is bounded
    EXPECT_EQ(a * sol.z, b);

    std::vector<std::array<Rat, 3>> lines = rows;
    lines.push_back({Rat(1), Rat(0), Rat(0)});
    lines.push_back({Rat(0), Rat(1), Rat(0)});
    std::optional<Rat> best;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Rat det = lines[i][0] * lines[j][1] - lines[i][1] * lines[j][0];
        if (det.is_zero()) continue;
        const Rat x = (lines[i][2] * lines[j][1] - lines[i][1] * lines[j][2]) / det;
        const Rat y = (lines[i][0] * lines[j][2] - lines[i][2] * lines[j][0]) / det;
        bool ok = x >= Rat(0) && y >= Rat(0);
        for (const auto& r : rows) ok = ok && r[0] * x + r[1] * y <= r[2];
        if (ok && (!best || c[0] * x + c[1] * y > *best)) best = c[0] * x + c[1] * y;
      }
    }
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(sol.objective, *best);
  }
}

TEST(Feasibility, StrictAndEqualityRows) {
  // x > 0, x < 0 is infeasible.
  std::vector<LinearConstraint> cs{{RatVec{1}, Relation::Greater, Rat(0)}, {RatVec{-1}, Relation::Greater, Rat(0)}};
  auto r = lp_feasible(1, cs);
  ASSERT_FALSE(r.feasible());
  EXPECT_TRUE(verify_infeasibility(cs, *r.certificate));

  // x + y = 1, x > 0, y > 0 is feasible.
  cs = {{RatVec{1, 1}, Relation::Equal, Rat(1)},
        {RatVec{1, 0}, Relation::Greater, Rat(0)},
        {RatVec{0, 1}, Relation::Greater, Rat(0)}};
  r = lp_feasible(2, cs);
  ASSERT_TRUE(r.feasible());
  EXPECT_TRUE(satisfies_all(cs, *r.point));

  EXPECT_TRUE(lp_feasible(3, {}).feasible());
}

// Random systems: any grid point found forces feasibility, and both answers re-verify.
TEST(Feasibility, CertificatesAgainstGridSearch) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-3, 3), rel(0, 2);
  int infeasible = 0;
  for (int t = 0; t < 150; ++t) {
    std::vector<LinearConstraint> cs;
    const int count = 2 + t % 4;
    for (int i = 0; i < count; ++i) {
      cs.push_back({RatVec{Rat(coef(rng)), Rat(coef(rng))}, static_cast<Relation>(rel(rng)), Rat(coef(rng))});
    }
    const auto r = lp_feasible(2, cs);
    bool grid_hit = false;
    for (int p = -24; p <= 24 && !grid_hit; ++p) {
      for (int q = -24; q <= 24 && !grid_hit; ++q) grid_hit = satisfies_all(cs, RatVec{Rat(p, 4), Rat(q, 4)});
    }
    if (grid_hit) EXPECT_TRUE(r.feasible());
    if (r.feasible()) {
      EXPECT_TRUE(satisfies_all(cs, *r.point));
      EXPECT_FALSE(r.certificate.has_value());
    } else {
      ++infeasible;
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_TRUE(verify_infeasibility(cs, *r.certificate));
    }
  }
  EXPECT_GT(infeasible, 10);
}
