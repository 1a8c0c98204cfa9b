#pragma once

#include <optional>
#include <vector>

#include "tensamp/surface/model.hpp"

namespace tensamp {

struct ZariskiDecomposition {
  DivisorClass positive;
  /// One coefficient per catalog curve; nonzero only on `support`.
  RatVec negative_coeffs;
  std::vector<std::size_t> support;
};

/// Fujita-style support enlargement over the catalog. Returns nullopt unless
/// neg_curves_complete holds and the result is a genuine decomposition:
/// nonnegative coefficients, negative definite support, P.C >= 0 on the
/// catalog and on every pseudo-effective generator.
std::optional<ZariskiDecomposition> zariski_decompose(const SurfaceModel& m, const DivisorClass& d);

/// Leading principal minors alternate in sign starting negative.
bool negative_definite(const RatMat& symmetric);

/// Gram matrix of the listed catalog curves.
RatMat support_gram(const SurfaceModel& m, const std::vector<std::size_t>& support);

}  // namespace tensamp
