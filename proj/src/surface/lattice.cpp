#include "tensamp/surface/lattice.hpp"

namespace tensamp {

void IntersectionLattice::validate(bool hodge_index) const {
  if (rank == 0) throw InvariantError("lattice rank must be positive");
  if (gram.rows() != rank || gram.cols() != rank) throw InvariantError("gram matrix is not rank x rank");
  if (!gram.is_symmetric()) throw InvariantError("gram matrix is not symmetric");
  if (basis_names.size() != rank) throw InvariantError("basis name count differs from rank");
  for (std::size_t i = 0; i < rank; ++i) {
    if (basis_names[i].empty()) throw InvariantError("empty basis name");
    for (std::size_t j = 0; j < i; ++j) {
      if (basis_names[i] == basis_names[j]) throw InvariantError("duplicate basis name " + basis_names[i]);
    }
  }
  if (hodge_index && !has_hodge_signature()) {
    throw InvariantError("gram matrix does not have signature (1, rank-1)");
  }
}

bool IntersectionLattice::has_hodge_signature() const {
  const Inertia in = inertia(gram);
  return in.positive == 1 && in.negative + 1 == rank && in.zero == 0;
}

std::size_t IntersectionLattice::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis_names.size(); ++i) {
    if (basis_names[i] == basis_name) return i;
  }
  return rank;
}

Rat pair(const IntersectionLattice& lat, const DivisorClass& d, const DivisorClass& e) {
  if (d.dim() != lat.rank || e.dim() != lat.rank) {
    throw UsageError("pair: class of dimension " + std::to_string(d.dim()) + "/" + std::to_string(e.dim()) +
                     " in a rank " + std::to_string(lat.rank) + " lattice");
  }
  return d.dot(lat.gram * e);
}

}  // namespace tensamp
