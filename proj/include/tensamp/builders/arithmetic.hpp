#pragma once

// Integer and rational checks around blow-ups of the plane and threefold
// blow-ups along curves.

#include <vector>

#include "tensamp/surface/lattice.hpp"
#include "tensamp/surface/verdict.hpp"

namespace tensamp {

/// qH - sum E in the blow-up basis (H, E1..Er).
DivisorClass dq_class(long r, const Rat& q);

/// D_q . (d'H - sum m'_i E_i) = q d' - sum m'_i.
Rat dq_pair(long r, const Rat& q, const Rat& d_prime, const std::vector<Rat>& m_prime);

/// r d^2 <= (sum m)^2, compared exactly in integers.
bool nagata_excluded(long r, long d, const std::vector<long>& m);

/// sum a_i = 3d: the class dH - sum a_i E_i pairs to zero with K.
bool anticanonical_obstruction(long r, long d, const std::vector<long>& a);

/// Conormal bundle of a curve in a threefold: unstable with maximal
/// destabilizing quotient of degree d (2d < e = total degree), or semistable.
struct Conormal {
  bool unstable = false;
  long e = 0;
  long d = 0;

  static Conormal Unstable(long e, long d);  // throws InvariantError unless 2d < e
  static Conormal Semistable() { return {}; }
};

/// True iff the conormal is unstable, deg != d and deg < e - d.
bool threefold_edge_check(long deg_l_c, const Conormal& conormal);

struct LineParams {
  long deg_l_c = 0;
  long e = 0;
  long d = 0;
};

/// Line on a degree-r hypersurface with normal bundle O(a) + O(b), a + b + r = 3:
/// (r - 5, r - 3, -b). Requires r > 5 and b in {0, 1}.
LineParams hypersurface_line_params(long r, long b);

struct PointBundleCheck {
  Verdict tensor_ample;
  Verdict ample;
  Verdict anti_ample;
  /// tensor_ample Yes, ample No, anti_ample No.
  bool matches_expected = false;
};

/// Classifies aH + sum l_i E_i on the blow-up at r general points with the
/// curve set {E_i} declared complete. All inputs must be positive.
PointBundleCheck blowup_point_bundle_check(long r, long a, const std::vector<long>& l);

}  // namespace tensamp
