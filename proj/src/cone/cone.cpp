#include "tensamp/cone/cone.hpp"

#include <algorithm>

#include "tensamp/exact/lp.hpp"

namespace tensamp {

namespace {

void require_dim(const ConeQ& c, const RatVec& x, const char* what) {
  if (x.dim() != c.ambient_dim) {
    throw UsageError(std::string(what) + ": vector of dimension " + std::to_string(x.dim()) +
                     " against cone in dimension " + std::to_string(c.ambient_dim));
  }
  for (const auto& g : c.generators) {
    if (g.dim() != c.ambient_dim) throw UsageError(std::string(what) + ": generator dimension mismatch");
  }
}

// Constraints on lambda (one per generator), optionally strict, with
// sum lambda_i g_i = x.
std::vector<LinearConstraint> combination_system(const ConeQ& c, const RatVec& x, Relation sign) {
  const std::size_t k = c.generators.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < k; ++i) cons.push_back({RatVec::unit(k, i), sign, Rat(0)});
  for (std::size_t j = 0; j < c.ambient_dim; ++j) {
    RatVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = c.generators[i][j];
    cons.push_back({std::move(row), Relation::Equal, x[j]});
  }
  return cons;
}

// Membership by LP alone; the functional is read off the Farkas multipliers
// of the equality rows.
MembershipResult lp_membership(const ConeQ& c, const RatVec& x) {
  const std::size_t k = c.generators.size();
  if (k == 0) {
    if (x.is_zero()) return {true, RatVec(0), std::nullopt};
    return {false, std::nullopt, (-x).primitive()};
  }
  const auto cons = combination_system(c, x, Relation::GreaterEqual);
  const auto res = lp_feasible(k, cons);
  if (res.feasible()) return {true, *res.point, std::nullopt};
  RatVec y(c.ambient_dim);
  for (std::size_t j = 0; j < c.ambient_dim; ++j) y[j] = res.certificate->multipliers[k + j];
  return {false, std::nullopt, (-y).primitive()};
}

void sort_unique(std::vector<RatVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct Ray {
  RatVec z;
  std::vector<bool> zero;  // constraint indices (processed so far) vanishing on z
};

// Extreme rays of the pointed cone {z : h_i . z >= 0}, where the h_i span Q^m.
std::vector<RatVec> pointed_extreme_rays(const std::vector<RatVec>& h, std::size_t m) {
  const std::size_t k = h.size();
  std::vector<std::size_t> initial;
  std::vector<RatVec> chosen;
  for (std::size_t i = 0; i < k && initial.size() < m; ++i) {
    chosen.push_back(h[i]);
    if (rank(chosen, m) == chosen.size()) {
      initial.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (initial.size() != m) throw InvariantError("dual_cone: constraints do not span the quotient");

  // Columns of the inverse of the chosen rows give a simplicial start.
  RatMat h0 = RatMat::from_rows(chosen, m);
  std::vector<Ray> rays;
  std::vector<bool> processed(k, false);
  for (auto i : initial) processed[i] = true;
  for (std::size_t j = 0; j < m; ++j) {
    auto col = solve_linear(h0, RatVec::unit(m, j));
    Ray r{col->primitive(), std::vector<bool>(k, false)};
    for (std::size_t t = 0; t < m; ++t) r.zero[initial[t]] = (t != j);
    rays.push_back(std::move(r));
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (processed[i]) continue;
    std::vector<Rat> s;
    for (const auto& r : rays) s.push_back(h[i].dot(r.z));
    std::vector<Ray> next;
    for (std::size_t a = 0; a < rays.size(); ++a) {
      if (s[a].sign() >= 0) {
        Ray r = rays[a];
        if (s[a].is_zero()) r.zero[i] = true;
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p].sign() <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (s[n].sign() >= 0) continue;
        std::vector<bool> common(k, false);
        std::size_t count = 0;
        for (std::size_t t = 0; t < k; ++t) {
          common[t] = rays[p].zero[t] && rays[n].zero[t];
          count += common[t] ? 1 : 0;
        }
        if (count + 2 < m) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          bool superset = true;
          for (std::size_t t = 0; t < k && superset; ++t) {
            if (common[t] && !rays[o].zero[t]) superset = false;
          }
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec z = rays[n].z * s[p] - rays[p].z * s[n];
        common[i] = true;
        next.push_back({z.primitive(), std::move(common)});
      }
    }
    rays = std::move(next);
    processed[i] = true;
  }

  std::vector<RatVec> out;
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace

void ConeQ::validate() const {
  for (const auto& g : generators) {
    if (g.dim() != ambient_dim) throw InvariantError("cone generator has wrong dimension");
    if (g.is_zero()) throw InvariantError("cone generator is zero");
  }
}

bool HalfSpaceQ::contains(const RatVec& x) const {
  const int s = normal.dot(x).sign();
  return strict ? s > 0 : s >= 0;
}

MembershipResult cone_contains(const ConeQ& c, const RatVec& x) {
  require_dim(c, x, "cone_contains");
  if (x.is_zero()) return {true, RatVec(c.generators.size()), std::nullopt};
  MembershipResult res = lp_membership(c, x);
  if (res.member || c.ambient_dim > kDualConeMaxDim) return res;
  // Prefer a facet normal of the cone as the separating functional.
  for (const auto& facet : dual_cone(c).generators) {
    if (facet.dot(x).sign() < 0) {
      res.functional = facet;
      break;
    }
  }
  return res;
}

bool verify_membership(const ConeQ& c, const RatVec& x, const MembershipResult& result) {
  if (result.member) {
    if (!result.coefficients || result.functional) return false;
    const RatVec& lam = *result.coefficients;
    if (lam.dim() != c.generators.size()) return false;
    RatVec sum(c.ambient_dim);
    for (std::size_t i = 0; i < lam.dim(); ++i) {
      if (lam[i].sign() < 0) return false;
      sum += c.generators[i] * lam[i];
    }
    return sum == x;
  }
  if (!result.functional || result.coefficients) return false;
  const RatVec& l = *result.functional;
  if (l.dim() != c.ambient_dim) return false;
  for (const auto& g : c.generators) {
    if (l.dot(g).sign() < 0) return false;
  }
  return l.dot(x).sign() < 0;
}

bool cone_interior_contains(const ConeQ& c, const RatVec& x) {
  require_dim(c, x, "cone_interior_contains");
  if (c.ambient_dim == 0) return true;
  if (rank(c.generators, c.ambient_dim) != c.ambient_dim) return false;
  return lp_feasible(c.generators.size(), combination_system(c, x, Relation::Greater)).feasible();
}

ConeQ dual_cone(const ConeQ& c) {
  if (c.ambient_dim > kDualConeMaxDim) {
    throw CapacityError("dual_cone: ambient dimension " + std::to_string(c.ambient_dim) +
                        " exceeds the cap of " + std::to_string(kDualConeMaxDim));
  }
  for (const auto& g : c.generators) {
    if (g.dim() != c.ambient_dim) throw UsageError("dual_cone: generator dimension mismatch");
  }
  const std::size_t n = c.ambient_dim;
  ConeQ out{n, {}};

  RatMat g = RatMat::from_rows(c.generators, n);
  for (const auto& l : null_space(g)) {
    out.generators.push_back(l.primitive());
    out.generators.push_back((-l).primitive());
  }

  // Pointed part lives in the row space of G; work in the coordinates of its
  // reduced-echelon basis B, where y = B^t z and y.g = z.(B g).
  const RowEchelon ech = row_reduce(g);
  const std::size_t m = ech.pivot_columns.size();
  if (m > 0) {
    std::vector<RatVec> basis;
    for (std::size_t r = 0; r < m; ++r) basis.push_back(ech.reduced.row(r));
    const RatMat b = RatMat::from_rows(basis, n);
    std::vector<RatVec> h;
    for (const auto& gen : c.generators) h.push_back(b * gen);
    const RatMat bt = b.transpose();
    for (const auto& z : pointed_extreme_rays(h, m)) out.generators.push_back((bt * z).primitive());
  }
  sort_unique(out.generators);
  return out;
}

bool subspace_meets_interior(const std::vector<RatVec>& span, const ConeQ& c) {
  for (const auto& s : span) {
    if (s.dim() != c.ambient_dim) throw UsageError("subspace_meets_interior: dimension mismatch");
  }
  require_dim(c, RatVec(c.ambient_dim), "subspace_meets_interior");
  if (c.ambient_dim == 0) return true;
  if (rank(c.generators, c.ambient_dim) != c.ambient_dim) return false;
  // Variables (lambda, mu): lambda > 0 and G lambda - V mu = 0.
  const std::size_t k = c.generators.size();
  const std::size_t p = span.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < k; ++i) cons.push_back({RatVec::unit(k + p, i), Relation::Greater, Rat(0)});
  for (std::size_t j = 0; j < c.ambient_dim; ++j) {
    RatVec row(k + p);
    for (std::size_t i = 0; i < k; ++i) row[i] = c.generators[i][j];
    for (std::size_t i = 0; i < p; ++i) row[k + i] = -span[i][j];
    cons.push_back({std::move(row), Relation::Equal, Rat(0)});
  }
  return lp_feasible(k + p, cons).feasible();
}

namespace {

Rat det2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Upper half plane (angle in [0, pi)) first.
int half(const RatVec& a) { return (a[1].sign() > 0 || (a[1].is_zero() && a[0].sign() > 0)) ? 0 : 1; }

bool angle_less(const RatVec& a, const RatVec& b) {
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return det2(a, b).sign() > 0;
}

}  // namespace

std::vector<RatVec> slice2d(const ConeQ& c, const RatVec& u, const RatVec& v) {
  if (u.dim() != c.ambient_dim || v.dim() != c.ambient_dim) throw UsageError("slice2d: plane dimension mismatch");
  if (rank({u, v}, c.ambient_dim) != 2) throw UsageError("slice2d: plane vectors are dependent");
  const RatMat plane = RatMat::from_columns({u, v}, c.ambient_dim);
  std::vector<RatVec> pts;
  for (const auto& g : c.generators) {
    auto coords = solve_linear(plane, g);
    if (!coords) throw UsageError("slice2d: generator " + g.str() + " is outside the plane");
    if (!coords->is_zero()) pts.push_back(coords->primitive());
  }
  sort_unique(pts);
  if (pts.empty()) return {};

  std::vector<RatVec> extremal;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ConeQ others{2, {}};
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.generators.push_back(pts[j]);
    }
    if (!lp_membership(others, pts[i]).member) extremal.push_back(pts[i]);
  }
  if (extremal.empty()) extremal = pts;

  std::sort(extremal.begin(), extremal.end(), angle_less);
  for (std::size_t s = 0; s < extremal.size(); ++s) {
    bool all_ccw = true;
    for (const auto& r : extremal) {
      if (det2(extremal[s], r).sign() < 0) all_ccw = false;
    }
    if (all_ccw && extremal.size() > 1) {
      // Pointed: every ray lies within a half-turn of the start.
      bool opposite = false;
      for (const auto& r : extremal) {
        if (det2(extremal[s], r).is_zero() && extremal[s].dot(r).sign() < 0) opposite = true;
      }
      if (opposite) break;
      std::rotate(extremal.begin(), extremal.begin() + static_cast<std::ptrdiff_t>(s), extremal.end());
      break;
    }
  }
  return extremal;
}

}  // namespace tensamp
