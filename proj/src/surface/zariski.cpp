#include "tensamp/surface/zariski.hpp"

#include <algorithm>

namespace tensamp {

bool negative_definite(const RatMat& symmetric) {
  const std::size_t n = symmetric.rows();
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = symmetric(i, j);
    const int expected = (k % 2 == 1) ? -1 : 1;
    if (determinant(minor).sign() != expected) return false;
  }
  return true;
}

RatMat support_gram(const SurfaceModel& m, const std::vector<std::size_t>& support) {
  RatMat g(support.size(), support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j)
      g(i, j) = m.pair(m.curves[support[i]].cls, m.curves[support[j]].cls);
  return g;
}

std::optional<ZariskiDecomposition> zariski_decompose(const SurfaceModel& m, const DivisorClass& d) {
  if (d.dim() != m.rank()) throw UsageError("zariski_decompose: class dimension mismatch");
  if (!m.neg_curves_complete) return std::nullopt;
  const std::size_t k = m.curves.size();

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < k; ++j) {
    if (m.pair(d, m.curves[j].cls).sign() < 0) {
      if (m.pair(m.curves[j].cls, m.curves[j].cls).sign() >= 0) return std::nullopt;
      support.push_back(j);
    }
  }

  RatVec coeffs(k);
  DivisorClass p = d;
  for (;;) {
    coeffs = RatVec(k);
    p = d;
    if (!support.empty()) {
      const RatMat g = support_gram(m, support);
      if (!negative_definite(g)) return std::nullopt;
      RatVec rhs(support.size());
      for (std::size_t i = 0; i < support.size(); ++i) rhs[i] = m.pair(d, m.curves[support[i]].cls);
      const auto x = solve_linear(g, rhs);
      if (!x) return std::nullopt;
      for (std::size_t i = 0; i < support.size(); ++i) {
        if ((*x)[i].sign() < 0) return std::nullopt;
        coeffs[support[i]] = (*x)[i];
        p -= m.curves[support[i]].cls * (*x)[i];
      }
    }
    bool grew = false;
    for (std::size_t j = 0; j < k; ++j) {
      if (std::find(support.begin(), support.end(), j) != support.end()) continue;
      if (m.pair(p, m.curves[j].cls).sign() < 0) {
        if (m.pair(m.curves[j].cls, m.curves[j].cls).sign() >= 0) return std::nullopt;
        support.push_back(j);
        grew = true;
      }
    }
    if (!grew) break;
  }
  std::sort(support.begin(), support.end());
  if (m.pseff_gens) {
    for (const auto& g : *m.pseff_gens) {
      if (m.pair(p, g).sign() < 0) return std::nullopt;
    }
  }
  return ZariskiDecomposition{std::move(p), std::move(coeffs), std::move(support)};
}

}  // namespace tensamp
