#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "toricdp/lattice.hpp"

namespace toricdp {

/// Self-intersection data (gamma_0, ..., gamma_{n-1}) of a fan, defined by
/// u_{i-1} - gamma_i u_i + u_{i+1} = 0.
struct GammaSequence {
  std::vector<Integer> values;

  std::size_t size() const noexcept { return values.size(); }
  Integer operator[](std::size_t i) const { return values[i]; }
  Integer sum() const;
  Integer max_abs() const;

  friend bool operator==(const GammaSequence&, const GammaSequence&) = default;
  friend auto operator<=>(const GammaSequence&, const GammaSequence&) = default;
};

std::ostream& operator<<(std::ostream& os, const GammaSequence& g);
/// "(-1,-1,-1)"
std::string to_string(const GammaSequence& g);

struct FanViolation {
  enum class Kind {
    TooFewRays,
    NonPrimitiveRay,
    NonUnitDeterminant,
    DuplicateRay,
    WrongWinding,
  };
  Kind kind;
  std::size_t index = 0;  // offending ray / cone index, when meaningful
  Integer value = 0;      // determinant or winding number, when meaningful

  std::string describe() const;
};

/// Returns the first violated invariant of a candidate ray sequence, or
/// nothing when the rays describe a complete smooth fan with
/// det(u_i, u_{i+1}) = 1 for all i.
std::optional<FanViolation> find_violation(std::span<const LatticeVector> rays);

/// Winding number of the cyclic ray sequence around the origin. Only
/// meaningful when every consecutive determinant is positive.
Integer winding_number(std::span<const LatticeVector> rays);

/// A complete smooth fan in Z², stored as its counterclockwise cyclic
/// sequence of primitive rays. Indices are read modulo size(). Immutable;
/// copies share storage.
class CompleteSmoothFan {
 public:
  /// Throws Error(InvalidFan) naming the first violated invariant.
  static CompleteSmoothFan validate(std::vector<LatticeVector> rays);

  /// Accepts clockwise input by reversing it before validation.
  static CompleteSmoothFan validate_any_orientation(
      std::vector<LatticeVector> rays);

  std::size_t size() const noexcept { return rays_->size(); }
  const std::vector<LatticeVector>& rays() const noexcept { return *rays_; }
  const LatticeVector& ray(std::size_t i) const;  // i taken modulo size()
  const GammaSequence& gammas() const noexcept { return *gammas_; }
  Integer gamma(std::size_t i) const;  // i taken modulo size()

  friend bool operator==(const CompleteSmoothFan& a,
                         const CompleteSmoothFan& b) {
    return a.rays() == b.rays();
  }

 private:
  CompleteSmoothFan(std::shared_ptr<const std::vector<LatticeVector>> rays,
                    std::shared_ptr<const GammaSequence> gammas)
      : rays_(std::move(rays)), gammas_(std::move(gammas)) {}

  std::shared_ptr<const std::vector<LatticeVector>> rays_;
  std::shared_ptr<const GammaSequence> gammas_;
};

/// [(-1,-1), (1,0), (0,1)]
CompleteSmoothFan projective_plane();

/// F_r with u_0 = -e_2, u_1 = e_1, u_2 = e_2, u_3 = -e_1 + r e_2.
CompleteSmoothFan hirzebruch(Integer r);

GammaSequence gamma_sequence(const CompleteSmoothFan& fan);

/// Rebuilds a fan from its gamma sequence using u_{i+1} = gamma_i u_i - u_{i-1}
/// from the seeds u_0 = (1,0), u_1 = (0,1). Throws ClosureFailure when the
/// recurrence does not return to the seeds, InvalidFan when the closed
/// sequence winds more than once, Overflow on arithmetic overflow.
CompleteSmoothFan from_gamma_sequence(const GammaSequence& g);

/// Rank of Pic(X) = n - 2.
Integer picard_rank(const CompleteSmoothFan& fan);

/// Inserts u_i + u_{i+1} at position i + 1.
CompleteSmoothFan blowup(const CompleteSmoothFan& fan, std::size_t i);

/// Removes ray i. Requires gamma_i == 1 and at least four rays.
CompleteSmoothFan blowdown(const CompleteSmoothFan& fan, std::size_t i);

/// Lexicographically smallest sequence among all rotations of the gamma
/// sequence and of its reversal. Complete invariant up to GL(2, Z).
GammaSequence canonical_key(const GammaSequence& g);
GammaSequence canonical_key(const CompleteSmoothFan& fan);

/// Canonical keys of every complete smooth fan with exactly n rays and
/// max |gamma_i| <= gamma_bound, sorted ascending. The bound truncates an
/// infinite family (all F_r occur for n = 4).
std::vector<GammaSequence> enumerate_fans(std::size_t n, Integer gamma_bound);

}  // namespace toricdp
