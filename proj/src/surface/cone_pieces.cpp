#include "tensamp/surface/cone_pieces.hpp"

#include "tensamp/exact/lp.hpp"

namespace tensamp {

TensorAmpleCone tensor_ample_cone_pieces(const SurfaceModel& m) {
  if (!m.pseff_gens) throw CapacityError("cone pieces need pseudo-effective cone data");
  if (!m.neg_curves_complete) throw CapacityError("cone pieces need a complete negative curve list");
  const auto negative = m.negative_curves();
  if (negative.size() > kMaxPieceCurves) {
    throw CapacityError("cone pieces: " + std::to_string(negative.size()) + " negative curves exceed the cap of " +
                        std::to_string(kMaxPieceCurves));
  }
  TensorAmpleCone out;
  out.pseff = m.pseff_cone();
  for (auto j : negative) {
    out.negative_curve_names.push_back(m.curves[j].name);
    out.hyperplane_normals.push_back(m.lattice.gram * m.curves[j].cls);
  }
  const std::size_t n = m.rank();
  const auto& gens = out.pseff.generators;
  const std::size_t k = gens.size();
  if (rank(gens, n) != n) return out;  // empty big cone

  // Variables lambda over the pseff generators; D = G lambda.
  std::vector<RatVec> normals_in_lambda;
  for (const auto& normal : out.hyperplane_normals) {
    RatVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = normal.dot(gens[i]);
    normals_in_lambda.push_back(std::move(row));
  }
  const std::size_t pieces = std::size_t{1} << negative.size();
  for (std::size_t mask = 0; mask < pieces; ++mask) {
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < k; ++i) cons.push_back({RatVec::unit(k, i), Relation::Greater, Rat(0)});
    std::vector<int> signs;
    std::string minus;
    for (std::size_t c = 0; c < negative.size(); ++c) {
      const int s = (mask >> c) & 1U ? -1 : 1;
      signs.push_back(s);
      cons.push_back({normals_in_lambda[c] * Rat(s), Relation::Greater, Rat(0)});
      if (s < 0) minus += out.negative_curve_names[c] + ",";
    }
    const auto res = lp_feasible(k, cons);
    if (!res.feasible()) continue;
    RatVec witness(n);
    for (std::size_t i = 0; i < k; ++i) witness += gens[i] * (*res.point)[i];
    const std::string label = minus.empty() ? "Amp" : "Big_{" + minus + "-}";
    out.pieces.push_back({label, std::move(signs), witness.primitive()});
  }
  return out;
}

}  // namespace tensamp
