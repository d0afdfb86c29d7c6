#pragma once

#include <chebwaring/numeric.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace chebwaring {

/// A partition 1^{m_1} 2^{m_2} ... of target, stored by multiplicity.
/// Only nonzero multiplicities are kept.
class PartitionM {
 public:
  using Multiplicities = std::map<std::uint32_t, std::uint32_t>;  // part size -> m_i

  PartitionM() = default;  // the empty partition of 0
  /// Throws Error(invalid_argument) on zero part sizes or multiplicities.
  explicit PartitionM(Multiplicities parts);

  std::uint32_t target() const noexcept { return target_; }
  /// l(lambda) = sum of multiplicities.
  std::uint32_t length() const noexcept { return length_; }
  std::uint32_t multiplicity(std::uint32_t part) const noexcept;
  const Multiplicities& parts() const noexcept { return parts_; }
  /// Parts listed largest first, e.g. {1:1, 2:1} -> [2, 1].
  std::vector<std::uint32_t> part_list() const;

  friend bool operator==(const PartitionM&, const PartitionM&) = default;

 private:
  Multiplicities parts_;
  std::uint32_t target_ = 0;
  std::uint32_t length_ = 0;
};

/// All partitions of n, each exactly once, in descending lexicographic
/// order of their part lists: 3 -> [3], [2,1], [1,1,1].
std::vector<PartitionM> enumerate_partitions(std::uint32_t n);

/// (-1)^{k-l} k (l-1)! / prod m_i!, the coefficient of prod e_i^{m_i} in the
/// expansion of the power sum p_k. Requires k >= 1 and lam.target() == k.
BigInt waring_coefficient(std::uint32_t k, const PartitionM& lam);

}  // namespace chebwaring
