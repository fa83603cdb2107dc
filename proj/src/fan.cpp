#include "toricdp/fan.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace toricdp {

Integer GammaSequence::sum() const {
  Integer s = 0;
  for (Integer g : values) s = checked_add(s, g);
  return s;
}

Integer GammaSequence::max_abs() const {
  Integer m = 0;
  for (Integer g : values) m = std::max(m, checked_abs(g));
  return m;
}

std::ostream& operator<<(std::ostream& os, const GammaSequence& g) {
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ',';
    os << g[i];
  }
  return os << ')';
}

std::string to_string(const GammaSequence& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

std::string FanViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::TooFewRays:
      os << "fan has " << value << " rays, at least 3 required";
      break;
    case Kind::NonPrimitiveRay:
      os << "ray " << index << " not primitive";
      break;
    case Kind::NonUnitDeterminant:
      os << "det(u_" << index << ", u_" << index + 1 << ") = " << value
         << ", expected 1";
      break;
    case Kind::DuplicateRay:
      os << "ray " << index << " repeats an earlier ray";
      break;
    case Kind::WrongWinding:
      os << "winding number " << value << " != 1";
      break;
  }
  return os.str();
}

namespace {

bool in_upper(const LatticeVector& u) {
  return u.y > 0 || (u.y == 0 && u.x > 0);
}

}  // namespace

// With every step turning by an angle in (0, pi), each full turn crosses from
// the closed lower half-plane into the open upper one exactly once.
Integer winding_number(std::span<const LatticeVector> rays) {
  const std::size_t n = rays.size();
  Integer w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_upper(rays[i]) && in_upper(rays[(i + 1) % n])) ++w;
  }
  return w;
}

std::optional<FanViolation> find_violation(
    std::span<const LatticeVector> rays) {
  using Kind = FanViolation::Kind;
  const std::size_t n = rays.size();
  if (n < 3) {
    return FanViolation{Kind::TooFewRays, 0, static_cast<Integer>(n)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_primitive(rays[i])) return FanViolation{Kind::NonPrimitiveRay, i};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = det2(rays[i], rays[(i + 1) % n]);
    if (d != 1) return FanViolation{Kind::NonUnitDeterminant, i, d};
  }
  if (const Integer w = winding_number(rays); w != 1) {
    return FanViolation{Kind::WrongWinding, 0, w};
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (std::find(rays.begin(), rays.begin() + i, rays[i]) !=
        rays.begin() + i) {
      return FanViolation{Kind::DuplicateRay, i};
    }
  }
  return std::nullopt;
}

CompleteSmoothFan CompleteSmoothFan::validate(std::vector<LatticeVector> rays) {
  if (auto v = find_violation(rays)) {
    throw Error(ErrorKind::InvalidFan, v->describe());
  }
  const std::size_t n = rays.size();
  auto gammas = std::make_shared<GammaSequence>();
  gammas->values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    gammas->values.push_back(det2(rays[(i + n - 1) % n], rays[(i + 1) % n]));
  }
  return CompleteSmoothFan(
      std::make_shared<const std::vector<LatticeVector>>(std::move(rays)),
      std::move(gammas));
}

CompleteSmoothFan CompleteSmoothFan::validate_any_orientation(
    std::vector<LatticeVector> rays) {
  if (rays.size() >= 2 && det2(rays[0], rays[1]) < 0) {
    std::reverse(rays.begin(), rays.end());
  }
  return validate(std::move(rays));
}

const LatticeVector& CompleteSmoothFan::ray(std::size_t i) const {
  return (*rays_)[i % rays_->size()];
}

Integer CompleteSmoothFan::gamma(std::size_t i) const {
  return gammas_->values[i % gammas_->size()];
}

CompleteSmoothFan projective_plane() {
  return CompleteSmoothFan::validate({{-1, -1}, {1, 0}, {0, 1}});
}

CompleteSmoothFan hirzebruch(Integer r) {
  if (r < 0) {
    throw Error(ErrorKind::InvalidArgument, "Hirzebruch index must be >= 0");
  }
  return CompleteSmoothFan::validate({{0, -1}, {1, 0}, {0, 1}, {-1, r}});
}

GammaSequence gamma_sequence(const CompleteSmoothFan& fan) {
  return fan.gammas();
}

CompleteSmoothFan from_gamma_sequence(const GammaSequence& g) {
  const std::size_t n = g.size();
  if (n < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "gamma sequence needs at least 3 entries");
  }
  std::vector<LatticeVector> rays{{1, 0}, {0, 1}};
  rays.reserve(n + 1);
  for (std::size_t i = 1; i < n; ++i) {
    rays.push_back(g[i] * rays[i] - rays[i - 1]);
  }
  const LatticeVector wrap = g[0] * rays[0] - rays[n - 1];
  if (rays[n] != rays[0] || wrap != rays[1]) {
    std::ostringstream os;
    os << "recurrence does not close: u_" << n << " = " << rays[n]
       << ", expected " << rays[0];
    throw Error(ErrorKind::ClosureFailure, os.str());
  }
  rays.pop_back();
  return CompleteSmoothFan::validate(std::move(rays));
}

Integer picard_rank(const CompleteSmoothFan& fan) {
  return static_cast<Integer>(fan.size()) - 2;
}

CompleteSmoothFan blowup(const CompleteSmoothFan& fan, std::size_t i) {
  const std::size_t n = fan.size();
  if (i >= n) throw Error(ErrorKind::InvalidArgument, "ray index out of range");
  std::vector<LatticeVector> rays = fan.rays();
  const LatticeVector w = fan.ray(i) + fan.ray(i + 1);
  rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i + 1), w);
  return CompleteSmoothFan::validate(std::move(rays));
}

CompleteSmoothFan blowdown(const CompleteSmoothFan& fan, std::size_t i) {
  const std::size_t n = fan.size();
  if (i >= n) throw Error(ErrorKind::InvalidArgument, "ray index out of range");
  if (n <= 3) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot blow down a fan with 3 rays");
  }
  if (fan.gamma(i) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "ray " + std::to_string(i) + " has gamma " +
                    std::to_string(fan.gamma(i)) + ", expected 1");
  }
  std::vector<LatticeVector> rays = fan.rays();
  rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
  return CompleteSmoothFan::validate(std::move(rays));
}

GammaSequence canonical_key(const GammaSequence& g) {
  const std::size_t n = g.size();
  GammaSequence best = g;
  GammaSequence candidate;
  candidate.values.resize(n);
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<Integer> base = g.values;
    if (pass == 1) std::reverse(base.begin(), base.end());
    for (std::size_t shift = 0; shift < n; ++shift) {
      std::rotate_copy(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(shift),
                       base.end(), candidate.values.begin());
      if (candidate < best) best = candidate;
    }
  }
  return best;
}

GammaSequence canonical_key(const CompleteSmoothFan& fan) {
  return canonical_key(fan.gammas());
}

std::vector<GammaSequence> enumerate_fans(std::size_t n, Integer gamma_bound) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "need at least 3 rays");
  if (gamma_bound < 0) {
    throw Error(ErrorKind::InvalidArgument, "gamma bound must be >= 0");
  }
  std::set<GammaSequence> keys;
  std::vector<LatticeVector> rays{{1, 0}, {0, 1}};
  GammaSequence gammas;
  gammas.values.assign(n, 0);

  // rays holds u_0..u_k; choose gamma_k and extend by one ray.
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    for (Integer g = -gamma_bound; g <= gamma_bound; ++g) {
      LatticeVector next;
      try {
        next = g * rays[k] - rays[k - 1];
      } catch (const Error&) {
        continue;
      }
      gammas.values[k] = g;
      if (k + 1 == n) {
        if (next != rays[0]) continue;
        const Integer g0 = det2(rays[n - 1], rays[1]);
        if (g0 < -gamma_bound || g0 > gamma_bound) continue;
        gammas.values[0] = g0;
        if (find_violation(rays)) continue;
        keys.insert(canonical_key(gammas));
        continue;
      }
      // Re-entering the upper half-plane before the last step means the
      // rays have already turned by at least 2*pi.
      if (!in_upper(rays[k]) && in_upper(next)) continue;
      rays.push_back(next);
      extend(k + 1);
      rays.pop_back();
    }
  };
  extend(1);
  return {keys.begin(), keys.end()};
}

}  // namespace toricdp
