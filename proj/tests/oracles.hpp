#pragma once

// Brute-force references used by the unit and acceptance suites. None of
// these call into the code paths they are used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "toricdp/classify.hpp"
#include "toricdp/polytope.hpp"

namespace toricdp::oracle {

// Lattice points on the closed segment [p, q] by scanning the bounding box
// and testing collinearity plus betweenness.
inline std::int64_t segment_points(const LatticeVector& p,
                                   const LatticeVector& q) {
  std::int64_t count = 0;
  for (std::int64_t x = std::min(p.x, q.x); x <= std::max(p.x, q.x); ++x) {
    for (std::int64_t y = std::min(p.y, q.y); y <= std::max(p.y, q.y); ++y) {
      const std::int64_t cross =
          (q.x - p.x) * (y - p.y) - (q.y - p.y) * (x - p.x);
      if (cross == 0) ++count;  // box containment gives betweenness
    }
  }
  return count;
}

// Kleiman numbers as the product of the intersection matrix, rebuilt here
// from raw determinants, with the coefficient vector.
inline std::vector<std::int64_t> kleiman_by_matrix(
    const std::vector<LatticeVector>& rays,
    const std::vector<std::int64_t>& coeffs) {
  const std::size_t n = rays.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const LatticeVector& prev = rays[(i + n - 1) % n];
    const LatticeVector& next = rays[(i + 1) % n];
    m[i][i] = -(prev.x * next.y - prev.y * next.x);
    m[i][(i + 1) % n] = 1;
    m[i][(i + n - 1) % n] = 1;
  }
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * coeffs[j];
  }
  return out;
}

inline bool all_positive(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t k) { return k > 0; });
}

// Unimodular 2x2 matrix [[a, b], [c, d]] with |entries| <= bound.
struct Matrix2 {
  std::int64_t a, b, c, d;
  std::int64_t det() const { return a * d - b * c; }
  LatticeVector apply(const LatticeVector& u) const {
    return {a * u.x + b * u.y, c * u.x + d * u.y};
  }
};

inline Matrix2 random_unimodular(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> pick(-bound, bound);
  for (;;) {
    Matrix2 m{pick(rng), pick(rng), pick(rng), pick(rng)};
    if (m.det() == 1 || m.det() == -1) return m;
  }
}

// Image of a ray sequence under a lattice automorphism, reordered
// counterclockwise when the map reverses orientation.
inline std::vector<LatticeVector> transform_rays(
    const std::vector<LatticeVector>& rays, const Matrix2& m) {
  std::vector<LatticeVector> out;
  for (const auto& u : rays) out.push_back(m.apply(u));
  if (m.det() < 0) std::reverse(out.begin(), out.end());
  return out;
}

// Canonical keys of n-ray fans with max |gamma| <= bound, without going
// through enumerate_fans: 3 rays give P^2, 4 rays give the F_r, and every
// complete smooth fan with at least 5 rays is a blowup of one with a ray
// fewer whose gammas are bounded by bound + 1 (blowing down a gamma = 1 ray
// lowers its neighbours' gammas by one).
inline std::set<GammaSequence> keys_by_blowup(std::size_t n,
                                              std::int64_t bound) {
  std::set<GammaSequence> out;
  if (n == 3) {
    if (bound >= 1) out.insert(canonical_key(projective_plane()));
    return out;
  }
  if (n == 4) {
    for (std::int64_t r = 0; r <= bound; ++r) {
      out.insert(canonical_key(hirzebruch(r)));
    }
    return out;
  }
  for (const GammaSequence& k : keys_by_blowup(n - 1, bound + 1)) {
    const CompleteSmoothFan base = from_gamma_sequence(k);
    for (std::size_t i = 0; i < base.size(); ++i) {
      const CompleteSmoothFan up = blowup(base, i);
      if (up.gammas().max_abs() <= bound) out.insert(canonical_key(up));
    }
  }
  return out;
}

// Ampleness-table oracle for F_r, restated from the ampleness inequalities
// a_0 + a_2 > 0 and a_1 + a_3 > r a_2 with a = indicator of the complement.
inline bool hirzebruch_ample(std::int64_t r, std::uint64_t mask) {
  std::array<std::int64_t, 4> a{};
  for (std::size_t i = 0; i < 4; ++i) a[i] = (mask >> i) & 1u ? 0 : 1;
  return a[0] + a[2] > 0 && a[1] + a[3] > r * a[2];
}

}  // namespace toricdp::oracle
