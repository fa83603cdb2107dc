#include "toricdp/polytope.hpp"

#include <algorithm>
#include <sstream>

namespace toricdp {

namespace {

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(Integer a, Integer b) { return -floor_div(-a, b); }

bool in_polytope(const InvariantDivisor& divisor, const LatticeVector& m) {
  const auto& rays = divisor.fan().rays();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (pairing(m, rays[i]) < -divisor.coeff(i)) return false;
  }
  return true;
}

struct Box {
  Integer xmin, xmax, ymin, ymax;
};

// Bounding box of P from the feasible pairwise intersections of its boundary
// lines. Returns nothing when P is empty.
std::optional<Box> bounding_box(const InvariantDivisor& divisor) {
  const auto& rays = divisor.fan().rays();
  const std::size_t n = rays.size();
  std::optional<Box> box;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Integer d = det2(rays[i], rays[j]);
      if (d == 0) continue;
      // <p, u_i> = -a_i, <p, u_j> = -a_j; p = (px, py) / d.
      const Integer ai = -divisor.coeff(i), aj = -divisor.coeff(j);
      Integer px = checked_sub(checked_mul(ai, rays[j].y),
                               checked_mul(aj, rays[i].y));
      Integer py = checked_sub(checked_mul(aj, rays[i].x),
                               checked_mul(ai, rays[j].x));
      if (d < 0) {
        d = -d;
        px = -px;
        py = -py;
      }
      bool feasible = true;
      for (std::size_t k = 0; k < n && feasible; ++k) {
        const Integer lhs = checked_add(checked_mul(px, rays[k].x),
                                        checked_mul(py, rays[k].y));
        feasible = lhs >= checked_mul(-divisor.coeff(k), d);
      }
      if (!feasible) continue;
      const Box b{floor_div(px, d), ceil_div(px, d), floor_div(py, d),
                  ceil_div(py, d)};
      if (!box) {
        box = b;
      } else {
        box->xmin = std::min(box->xmin, b.xmin);
        box->xmax = std::max(box->xmax, b.xmax);
        box->ymin = std::min(box->ymin, b.ymin);
        box->ymax = std::max(box->ymax, b.ymax);
      }
    }
  }
  return box;
}

[[noreturn]] void throw_not_ample(const AmplenessVerdict& verdict) {
  std::ostringstream os;
  const std::size_t w = *verdict.witness;
  os << "divisor is not ample: L.D_" << w << " = " << verdict.kleiman[w]
     << " <= 0 (witness " << w << ")";
  throw Error(ErrorKind::NotAmple, os.str());
}

}  // namespace

DivisorPolytope polytope_of(const InvariantDivisor& divisor) {
  const AmplenessVerdict verdict = is_ample(divisor);
  if (!verdict.ample) throw_not_ample(verdict);

  const CompleteSmoothFan& fan = divisor.fan();
  const std::size_t n = fan.size();
  DivisorPolytope p{divisor, {}, {}};
  p.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.vertices.push_back(solve_unimodular_pair(
        fan.ray(i), divisor.coeff(i), fan.ray(i + 1), divisor.coeff(i + 1)));
  }
  p.facet_volumes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.facet_volumes.push_back(
        segment_lattice_count(p.vertices[(i + n - 1) % n], p.vertices[i]));
  }

  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector& a = p.vertices[(i + n - 1) % n];
    const LatticeVector& b = p.vertices[i];
    const LatticeVector& c = p.vertices[(i + 1) % n];
    if (!in_polytope(divisor, b) || det2(b - a, c - b) <= 0) {
      throw Error(ErrorKind::Internal,
                  "vertex cycle of an ample divisor is not strictly convex");
    }
  }
  return p;
}

Integer facet_volume(const DivisorPolytope& polytope, std::size_t i) {
  const std::size_t n = polytope.vertices.size();
  if (i >= n) throw Error(ErrorKind::InvalidArgument, "facet index out of range");
  const Integer closed = checked_abs(intersect_curve(polytope.divisor, i));
  const Integer by_gcd = segment_lattice_count(
      polytope.vertices[(i + n - 1) % n], polytope.vertices[i]);
  if (closed != by_gcd || by_gcd != polytope.facet_volumes[i]) {
    std::ostringstream os;
    os << "facet " << i << ": closed form " << closed << " but gcd count "
       << by_gcd;
    throw Error(ErrorKind::Internal, os.str());
  }
  return closed;
}

std::vector<LatticeVector> lattice_points_any(const InvariantDivisor& divisor) {
  std::vector<LatticeVector> points;
  const auto box = bounding_box(divisor);
  if (!box) return points;
  for (Integer x = box->xmin; x <= box->xmax; ++x) {
    for (Integer y = box->ymin; y <= box->ymax; ++y) {
      if (in_polytope(divisor, {x, y})) points.push_back({x, y});
    }
  }
  return points;
}

std::vector<LatticeVector> lattice_points(const InvariantDivisor& divisor) {
  const AmplenessVerdict verdict = is_ample(divisor);
  if (!verdict.ample) throw_not_ample(verdict);
  return lattice_points_any(divisor);
}

std::size_t facet_lattice_count(const InvariantDivisor& divisor,
                                std::size_t i) {
  if (i >= divisor.size()) {
    throw Error(ErrorKind::InvalidArgument, "facet index out of range");
  }
  const LatticeVector& u = divisor.fan().ray(i);
  const Integer level = -divisor.coeff(i);
  const auto points = lattice_points_any(divisor);
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const LatticeVector& m) {
        return pairing(m, u) == level;
      }));
}

std::vector<bool> facet_occupancy(const InvariantDivisor& divisor) {
  const auto points = lattice_points_any(divisor);
  std::vector<bool> occupied(divisor.size(), false);
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    const LatticeVector& u = divisor.fan().ray(i);
    const Integer level = -divisor.coeff(i);
    occupied[i] = std::any_of(points.begin(), points.end(),
                              [&](const LatticeVector& m) {
                                return pairing(m, u) == level;
                              });
  }
  return occupied;
}

}  // namespace toricdp
