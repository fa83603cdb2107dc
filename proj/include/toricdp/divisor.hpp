#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricdp/fan.hpp"

namespace toricdp {

/// L = sum_i a_i D_i on a fixed fan. On a smooth surface every such divisor
/// is Cartier.
class InvariantDivisor {
 public:
  /// Throws InvalidArgument when coeffs.size() != fan.size().
  InvariantDivisor(CompleteSmoothFan fan, std::vector<Integer> coeffs);

  const CompleteSmoothFan& fan() const noexcept { return fan_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  Integer coeff(std::size_t i) const;  // i taken modulo size()

  InvariantDivisor operator-(const InvariantDivisor& other) const;

 private:
  CompleteSmoothFan fan_;
  std::vector<Integer> coeffs_;
};

/// Subset Delta of the ray indices, stored as a bitmask (bit i <=> i in Delta).
class SupportSet {
 public:
  static constexpr std::size_t kMaxRays = 63;

  SupportSet() = default;
  SupportSet(std::size_t n, std::uint64_t mask);
  static SupportSet from_indices(std::size_t n,
                                 const std::vector<std::size_t>& indices);

  std::size_t universe() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  std::size_t cardinality() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<std::size_t> indices() const;
  SupportSet complement() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

/// Kleiman numbers L . D_i for every i, with the verdict derived from them.
struct AmplenessVerdict {
  bool ample = false;
  std::vector<Integer> kleiman;
  std::optional<std::size_t> witness;  // first i with L . D_i <= 0
};

/// K_X = -sum D_i.
InvariantDivisor canonical_divisor(const CompleteSmoothFan& fan);

/// L . D_i = a_{i-1} + a_{i+1} - gamma_i a_i.
Integer intersect_curve(const InvariantDivisor& divisor, std::size_t i);

/// D_k . D_i: -gamma_i on the diagonal, 1 for cyclically adjacent indices,
/// 0 otherwise.
std::vector<std::vector<Integer>> intersection_matrix(
    const CompleteSmoothFan& fan);

AmplenessVerdict is_ample(const InvariantDivisor& divisor);

/// div(chi^m) = sum_i <m, u_i> D_i.
InvariantDivisor principal_divisor(const CompleteSmoothFan& fan,
                                   const LatticeVector& m);

/// Returns m with lhs - rhs = div(chi^m) when the divisors are linearly
/// equivalent, nothing otherwise. Both divisors must live on the same fan.
std::optional<LatticeVector> linearly_equivalent(const InvariantDivisor& lhs,
                                                 const InvariantDivisor& rhs);

/// -(K_X + D) for D = sum_{i in Delta} D_i: coefficient 1 off Delta, 0 on it.
InvariantDivisor log_anticanonical(const CompleteSmoothFan& fan,
                                   const SupportSet& delta);

}  // namespace toricdp
