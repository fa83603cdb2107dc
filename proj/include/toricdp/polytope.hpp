#pragma once

#include <cstddef>
#include <vector>

#include "toricdp/divisor.hpp"

namespace toricdp {

/// Polytope P = {m : <m, u_i> >= -a_i} of an ample divisor. Vertex m_i is
/// the intersection of the facets P_i and P_{i+1}; facet P_i is the edge
/// m_{i-1} -> m_i.
struct DivisorPolytope {
  InvariantDivisor divisor;
  std::vector<LatticeVector> vertices;
  std::vector<Integer> facet_volumes;
};

/// Throws Error(NotAmple) carrying the witness index in its message when the
/// divisor is not ample.
DivisorPolytope polytope_of(const InvariantDivisor& divisor);

/// Lattice length of facet P_i. Computed from |L . D_i| and from the gcd
/// count on the edge endpoints; a disagreement throws Error(Internal).
Integer facet_volume(const DivisorPolytope& polytope, std::size_t i);

/// All lattice points of P for an ample divisor, sorted.
std::vector<LatticeVector> lattice_points(const InvariantDivisor& divisor);

/// All lattice points of P for any divisor; P may be empty. Sorted.
std::vector<LatticeVector> lattice_points_any(const InvariantDivisor& divisor);

/// Number of lattice points of P lying on the line <m, u_i> = -a_i.
std::size_t facet_lattice_count(const InvariantDivisor& divisor,
                                std::size_t i);

/// For each i, whether the facet P_i contains a lattice point. Works for
/// non-ample divisors, where some facets collapse or vanish.
std::vector<bool> facet_occupancy(const InvariantDivisor& divisor);

}  // namespace toricdp
