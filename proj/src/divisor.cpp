#include "toricdp/divisor.hpp"

#include <bit>

namespace toricdp {

InvariantDivisor::InvariantDivisor(CompleteSmoothFan fan,
                                   std::vector<Integer> coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != fan_.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "divisor has " + std::to_string(coeffs_.size()) +
                    " coefficients for a fan with " +
                    std::to_string(fan_.size()) + " rays");
  }
}

Integer InvariantDivisor::coeff(std::size_t i) const {
  return coeffs_[i % coeffs_.size()];
}

InvariantDivisor InvariantDivisor::operator-(
    const InvariantDivisor& other) const {
  if (!(fan_ == other.fan_)) {
    throw Error(ErrorKind::InvalidArgument, "divisors live on different fans");
  }
  std::vector<Integer> diff(coeffs_.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  }
  return {fan_, std::move(diff)};
}

SupportSet::SupportSet(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n > kMaxRays) {
    throw Error(ErrorKind::TooLarge, "support sets hold at most 63 rays");
  }
  if (mask >> n) {
    throw Error(ErrorKind::InvalidArgument,
                "support set index out of range for " + std::to_string(n) +
                    " rays");
  }
}

SupportSet SupportSet::from_indices(std::size_t n,
                                    const std::vector<std::size_t>& indices) {
  std::uint64_t mask = 0;
  for (std::size_t i : indices) {
    if (i >= n) {
      throw Error(ErrorKind::InvalidArgument,
                  "support index " + std::to_string(i) + " out of range");
    }
    mask |= std::uint64_t{1} << i;
  }
  return {n, mask};
}

std::size_t SupportSet::cardinality() const noexcept {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> SupportSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

SupportSet SupportSet::complement() const {
  const std::uint64_t all =
      n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return {n_, all & ~mask_};
}

InvariantDivisor canonical_divisor(const CompleteSmoothFan& fan) {
  return {fan, std::vector<Integer>(fan.size(), -1)};
}

Integer intersect_curve(const InvariantDivisor& divisor, std::size_t i) {
  const std::size_t n = divisor.size();
  if (i >= n) throw Error(ErrorKind::InvalidArgument, "ray index out of range");
  const Integer neighbours =
      checked_add(divisor.coeff(i + n - 1), divisor.coeff(i + 1));
  return checked_sub(neighbours,
                     checked_mul(divisor.fan().gamma(i), divisor.coeff(i)));
}

std::vector<std::vector<Integer>> intersection_matrix(
    const CompleteSmoothFan& fan) {
  const std::size_t n = fan.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
  // Adjacency is cyclic; for n = 3 every pair of distinct rays is adjacent.
  for (std::size_t i = 0; i < n; ++i) {
    m[i][(i + 1) % n] = 1;
    m[(i + 1) % n][i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) m[i][i] = checked_neg(fan.gamma(i));
  return m;
}

AmplenessVerdict is_ample(const InvariantDivisor& divisor) {
  AmplenessVerdict v;
  v.kleiman.reserve(divisor.size());
  for (std::size_t i = 0; i < divisor.size(); ++i) {
    const Integer k = intersect_curve(divisor, i);
    v.kleiman.push_back(k);
    if (k <= 0 && !v.witness) v.witness = i;
  }
  v.ample = !v.witness.has_value();
  return v;
}

InvariantDivisor principal_divisor(const CompleteSmoothFan& fan,
                                   const LatticeVector& m) {
  std::vector<Integer> coeffs;
  coeffs.reserve(fan.size());
  for (const LatticeVector& u : fan.rays()) coeffs.push_back(pairing(m, u));
  return {fan, std::move(coeffs)};
}

std::optional<LatticeVector> linearly_equivalent(const InvariantDivisor& lhs,
                                                 const InvariantDivisor& rhs) {
  const InvariantDivisor diff = lhs - rhs;
  const CompleteSmoothFan& fan = diff.fan();
  // <m, u_0> = d_0 and <m, u_1> = d_1 pin m down; the other rays must agree.
  const LatticeVector m = solve_unimodular_pair(
      fan.ray(0), checked_neg(diff.coeff(0)), fan.ray(1),
      checked_neg(diff.coeff(1)));
  for (std::size_t i = 2; i < fan.size(); ++i) {
    if (pairing(m, fan.ray(i)) != diff.coeff(i)) return std::nullopt;
  }
  return m;
}

InvariantDivisor log_anticanonical(const CompleteSmoothFan& fan,
                                   const SupportSet& delta) {
  if (delta.universe() != fan.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "support set and fan disagree on the number of rays");
  }
  std::vector<Integer> coeffs(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    coeffs[i] = delta.contains(i) ? 0 : 1;
  }
  return {fan, std::move(coeffs)};
}

}  // namespace toricdp
