#include "tensamp/builders/arithmetic.hpp"

#include "tensamp/builders/blowup.hpp"
#include "tensamp/surface/classify.hpp"

namespace tensamp {

DivisorClass dq_class(long r, const Rat& q) {
  if (r < 1) throw UsageError("dq_class needs r >= 1");
  RatVec v(static_cast<std::size_t>(r) + 1);
  v[0] = q;
  for (long i = 1; i <= r; ++i) v[static_cast<std::size_t>(i)] = -1;
  return v;
}

Rat dq_pair(long r, const Rat& q, const Rat& d_prime, const std::vector<Rat>& m_prime) {
  if (r < 1) throw UsageError("dq_pair needs r >= 1");
  if (m_prime.size() != static_cast<std::size_t>(r)) {
    throw UsageError("dq_pair: " + std::to_string(m_prime.size()) + " multiplicities for r = " + std::to_string(r));
  }
  Rat out = q * d_prime;
  for (const auto& m : m_prime) out -= m;
  return out;
}

bool nagata_excluded(long r, long d, const std::vector<long>& m) {
  if (r < 1 || d < 1) throw UsageError("nagata_excluded needs r >= 1 and d >= 1");
  if (m.size() != static_cast<std::size_t>(r)) {
    throw UsageError("nagata_excluded: " + std::to_string(m.size()) + " multiplicities for r = " + std::to_string(r));
  }
  mpz_class sum = 0;
  for (long x : m) {
    if (x < 0) throw UsageError("nagata_excluded: multiplicities must be nonnegative");
    sum += x;
  }
  const mpz_class lhs = mpz_class(r) * mpz_class(d) * mpz_class(d);
  return lhs <= sum * sum;
}

bool anticanonical_obstruction(long r, long d, const std::vector<long>& a) {
  if (a.size() != static_cast<std::size_t>(r)) {
    throw UsageError("anticanonical_obstruction: " + std::to_string(a.size()) + " entries for r = " +
                     std::to_string(r));
  }
  mpz_class sum = 0;
  for (long x : a) sum += x;
  return sum == mpz_class(3) * mpz_class(d);
}

Conormal Conormal::Unstable(long e, long d) {
  if (2 * d >= e) {
    throw InvariantError("unstable conormal needs 2d < e (got e=" + std::to_string(e) + ", d=" + std::to_string(d) + ")");
  }
  return Conormal{true, e, d};
}

bool threefold_edge_check(long deg_l_c, const Conormal& conormal) {
  if (!conormal.unstable) return false;
  if (2 * conormal.d >= conormal.e) throw InvariantError("unstable conormal needs 2d < e");
  return deg_l_c != conormal.d && deg_l_c < conormal.e - conormal.d;
}

LineParams hypersurface_line_params(long r, long b) {
  if (r <= 5) throw UsageError("hypersurface_line_params needs degree r > 5, got " + std::to_string(r));
  if (b != 0 && b != 1) throw UsageError("hypersurface_line_params needs b in {0, 1}, got " + std::to_string(b));
  return {r - 5, r - 3, -b};
}

PointBundleCheck blowup_point_bundle_check(long r, long a, const std::vector<long>& l) {
  if (r < 1 || a < 1) throw UsageError("blowup_point_bundle_check needs r >= 1 and a >= 1");
  if (l.size() != static_cast<std::size_t>(r)) {
    throw UsageError("blowup_point_bundle_check: " + std::to_string(l.size()) + " exceptional multiples for r = " +
                     std::to_string(r));
  }
  for (long x : l) {
    if (x < 1) throw UsageError("blowup_point_bundle_check: exceptional multiples must be positive");
  }
  const SurfaceModel m = build_blowup_p2({r, PointConfig::General, true, std::nullopt});
  RatVec d(static_cast<std::size_t>(r) + 1);
  d[0] = a;
  for (std::size_t i = 0; i < l.size(); ++i) d[i + 1] = l[i];
  PointBundleCheck out;
  out.tensor_ample = is_tensor_ample(m, d);
  out.ample = is_ample(m, d);
  out.anti_ample = is_ample(m, -d);
  out.matches_expected = out.tensor_ample.yes() && out.ample.no() && out.anti_ample.no();
  return out;
}

}  // namespace tensamp
