#include "tensamp/builders/toric.hpp"

#include "tensamp/surface/verify.hpp"

namespace tensamp {

namespace {

std::string cycle_str(const ToricCycle& tc) {
  std::string s = "(";
  for (std::size_t i = 0; i < tc.a.size(); ++i) s += (i ? "," : "") + std::to_string(tc.a[i]);
  return s + ")";
}

long rule_pairing(const ToricCycle& tc, std::size_t i, std::size_t j) {
  const std::size_t k = tc.a.size();
  if (i == j) return tc.a[i];
  if ((i + 1) % k == j || (j + 1) % k == i) return 1;
  return 0;
}

}  // namespace

std::vector<std::array<long, 2>> toric_rays(const ToricCycle& tc) {
  const std::size_t k = tc.a.size();
  if (k < 3) throw InvariantError("toric cycle needs at least 3 entries, got " + cycle_str(tc));
  long sum = 0;
  for (long x : tc.a) sum += x;
  if (sum != 12 - 3 * static_cast<long>(k)) {
    throw InvariantError("toric cycle " + cycle_str(tc) + " has sum " + std::to_string(sum) + ", expected " +
                         std::to_string(12 - 3 * static_cast<long>(k)));
  }
  std::vector<std::array<long, 2>> v{{1, 0}, {0, 1}};
  for (std::size_t i = 1; i <= k; ++i) {
    const long ai = tc.a[i % k];
    v.push_back({-v[i - 1][0] - ai * v[i][0], -v[i - 1][1] - ai * v[i][1]});
  }
  if (v[k] != v[0] || v[k + 1] != v[1]) {
    throw InvariantError("ray recurrence for toric cycle " + cycle_str(tc) + " does not close");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i][0] * v[i + 1][1] - v[i][1] * v[i + 1][0] != 1) {
      throw InvariantError("consecutive rays of toric cycle " + cycle_str(tc) + " are not a positive basis");
    }
  }
  v.resize(k);
  return v;
}

ToricSurface build_toric(const ToricCycle& tc) {
  const auto rays = toric_rays(tc);
  const std::size_t k = rays.size();
  const std::size_t n = k - 2;

  // D_j for j >= 2 is a basis vector; the linear relations give D0 and D1.
  std::vector<DivisorClass> cls(k, RatVec(n));
  for (std::size_t j = 2; j < k; ++j) {
    cls[j][j - 2] = 1;
    cls[0][j - 2] = Rat(-rays[j][0]);
    cls[1][j - 2] = Rat(-rays[j][1]);
  }

  SurfaceModel m;
  m.lattice.rank = n;
  m.lattice.gram = RatMat(n, n);
  for (std::size_t i = 2; i < k; ++i) {
    m.lattice.basis_names.push_back("D" + std::to_string(i));
    for (std::size_t j = 2; j < k; ++j) m.lattice.gram(i - 2, j - 2) = rule_pairing(tc, i, j);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (pair(m.lattice, cls[i], cls[j]) != Rat(rule_pairing(tc, i, j))) {
        throw InvariantError("toric intersection numbers of " + cycle_str(tc) + " do not descend to the quotient");
      }
    }
  }

  m.canonical = RatVec(n);
  for (std::size_t i = 0; i < k; ++i) {
    m.canonical -= cls[i];
    m.curves.push_back({"D" + std::to_string(i), cls[i]});
  }
  m.pseff_gens = cls;
  m.neg_curves_complete = true;
  m.curve_cone_generated = true;
  m.hodge_index = true;
  m.validate();

  RatVec ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1;
  Verdict anti{Status::Yes, InteriorCertificate{"pseff", ones}, {"pseff_gens"}, {}};
  if (!verify(m, m.canonical, Property::AntiBig, anti)) {
    throw InvariantError("anti-bigness certificate of K failed for " + cycle_str(tc));
  }
  return ToricSurface{std::move(m), rays, std::move(anti)};
}

}  // namespace tensamp
