#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricdp/divisor.hpp"

namespace toricdp {

/// Verdict for one pair (X, D), D = sum_{i in delta} D_i: whether
/// -(K_X + D) is ample, with the Kleiman vector as certificate.
struct ClassificationRecord {
  SupportSet delta;
  bool ample = false;
  std::vector<Integer> kleiman;
  std::optional<std::size_t> witness;

  bool pure_del_pezzo() const noexcept { return delta.empty(); }
};

inline constexpr std::size_t kMaxClassifyRays = 20;

/// One record per subset of the rays, in ascending bitmask order. Throws
/// Error(TooLarge) for more than kMaxClassifyRays rays.
std::vector<ClassificationRecord> classify_pairs(const CompleteSmoothFan& fan);

/// First disagreement found by a verification suite.
struct Counterexample {
  GammaSequence fan_key;
  std::vector<LatticeVector> rays;
  SupportSet delta;
  bool expected_ample = false;
  bool observed_ample = false;
  std::vector<Integer> kleiman;
  std::optional<std::size_t> witness;
  std::string note;
};

struct VerificationReport {
  std::string suite;  // "t1", "t2", "t3", "volumes"
  bool pass = false;
  std::uint64_t verdicts_checked = 0;
  std::uint64_t fans_examined = 0;
  std::vector<std::string> scope;  // human-readable bounds and readings
  std::optional<Counterexample> counterexample;
};

/// Supports on P^2 whose -(K + D) is ample, as bitmasks over {0,1,2}: the
/// empty support (P^2 is del Pezzo) and the six listed nonempty ones.
std::set<std::uint64_t> theorem_2_expected();

/// Expected verdict for -(K + D_Delta) on F_r from the four cases of the
/// Hirzebruch classification, and non-ampleness for |Delta| >= 3.
bool theorem_3_expected(Integer r, std::uint64_t mask);

/// Classifies P^2 and compares the ample nonempty supports with `expected`.
VerificationReport verify_theorem_2(
    const std::set<std::uint64_t>& expected = theorem_2_expected());

/// Checks all 16 supports on F_r for r = 0..r_max. Requires r_max >= 2.
VerificationReport verify_theorem_3(Integer r_max);

/// Bounded exhaustive check that no nonempty support gives an ample
/// -(K + D) on any enumerated fan with n in n_set rays (each n >= 5) and
/// max |gamma_i| <= gamma_bound. Also checks |Delta| >= 3 on the 3- and
/// 4-ray fans within the same bound.
VerificationReport verify_theorem_1(const std::set<std::size_t>& n_set,
                                    Integer gamma_bound);

struct VolumeCheckOptions {
  std::size_t samples = 1000;
  std::size_t max_rays = 6;
  Integer gamma_bound = 3;
  Integer coeff_bound = 4;
  std::uint64_t seed = 20240611;
};

/// Samples ample divisors and checks that the lattice length of every facet,
/// computed by closed form, by gcd on the vertices and by brute-force edge
/// counting, equals L . D_i.
VerificationReport verify_volumes(const VolumeCheckOptions& options = {});

}  // namespace toricdp
