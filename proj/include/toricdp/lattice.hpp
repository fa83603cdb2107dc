#pragma once

#include <cstdint>
#include <ostream>

#include "toricdp/error.hpp"

namespace toricdp {

using Integer = std::int64_t;

// Checked 64-bit arithmetic. Overflow raises Error(ErrorKind::Overflow).
Integer checked_add(Integer a, Integer b);
Integer checked_sub(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);
Integer checked_neg(Integer a);
Integer checked_abs(Integer a);

/// A point of Z². Used both for ray generators (lattice N) and for
/// characters / polytope points (lattice M); the role is fixed by the caller.
struct LatticeVector {
  Integer x = 0;
  Integer y = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& u, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& u);
LatticeVector operator*(Integer k, const LatticeVector& u);

std::ostream& operator<<(std::ostream& os, const LatticeVector& u);

/// u.x*v.y - u.y*v.x
Integer det2(const LatticeVector& u, const LatticeVector& v);

/// Pairing <m, u> between M and N.
Integer pairing(const LatticeVector& m, const LatticeVector& u);

/// gcd(|x|, |y|) == 1. The zero vector is not primitive.
bool is_primitive(const LatticeVector& u);

/// Number of lattice points on the closed segment [p, q] minus one,
/// i.e. gcd(|p.x - q.x|, |p.y - q.y|). Returns 0 when p == q.
Integer segment_lattice_count(const LatticeVector& p, const LatticeVector& q);

/// The unique m with <m,u> = -a and <m,v> = -b. Requires det2(u, v) == 1,
/// otherwise throws ErrorKind::NotUnimodular.
LatticeVector solve_unimodular_pair(const LatticeVector& u, Integer a,
                                    const LatticeVector& v, Integer b);

}  // namespace toricdp
