#include "toricdp/lattice.hpp"

#include <numeric>
#include <string>

namespace toricdp {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw Error(ErrorKind::Overflow, std::string("integer overflow in ") + op);
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NotUnimodular: return "not unimodular";
    case ErrorKind::InvalidFan: return "invalid fan";
    case ErrorKind::ClosureFailure: return "closure failure";
    case ErrorKind::NotAmple: return "not ample";
    case ErrorKind::TooLarge: return "too large";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

Integer checked_neg(Integer a) { return checked_sub(0, a); }

Integer checked_abs(Integer a) { return a < 0 ? checked_neg(a) : a; }

LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
  return {checked_add(u.x, v.x), checked_add(u.y, v.y)};
}

LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
  return {checked_sub(u.x, v.x), checked_sub(u.y, v.y)};
}

LatticeVector operator-(const LatticeVector& u) {
  return {checked_neg(u.x), checked_neg(u.y)};
}

LatticeVector operator*(Integer k, const LatticeVector& u) {
  return {checked_mul(k, u.x), checked_mul(k, u.y)};
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& u) {
  return os << '(' << u.x << ',' << u.y << ')';
}

Integer det2(const LatticeVector& u, const LatticeVector& v) {
  return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

Integer pairing(const LatticeVector& m, const LatticeVector& u) {
  return checked_add(checked_mul(m.x, u.x), checked_mul(m.y, u.y));
}

bool is_primitive(const LatticeVector& u) {
  return std::gcd(checked_abs(u.x), checked_abs(u.y)) == 1;
}

Integer segment_lattice_count(const LatticeVector& p, const LatticeVector& q) {
  const LatticeVector d = p - q;
  return std::gcd(checked_abs(d.x), checked_abs(d.y));
}

LatticeVector solve_unimodular_pair(const LatticeVector& u, Integer a,
                                    const LatticeVector& v, Integer b) {
  const Integer d = det2(u, v);
  if (d != 1) {
    throw Error(ErrorKind::NotUnimodular,
                "det(u, v) = " + std::to_string(d) + ", expected 1");
  }
  // Cramer's rule with unit determinant.
  return {checked_sub(checked_mul(b, u.y), checked_mul(a, v.y)),
          checked_add(checked_mul(checked_neg(b), u.x), checked_mul(a, v.x))};
}

}  // namespace toricdp
