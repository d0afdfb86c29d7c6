#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>
#include <chebwaring/partitions.hpp>

#include <functional>
#include <string>

namespace chebwaring {

PartitionM::PartitionM(Multiplicities parts) : parts_(std::move(parts)) {
  for (const auto& [part, m] : parts_) {
    require(part > 0, "partition parts must be positive");
    require(m > 0, "stored multiplicities must be positive");
    target_ += part * m;
    length_ += m;
  }
}

std::uint32_t PartitionM::multiplicity(std::uint32_t part) const noexcept {
  auto it = parts_.find(part);
  return it == parts_.end() ? 0 : it->second;
}

std::vector<std::uint32_t> PartitionM::part_list() const {
  std::vector<std::uint32_t> out;
  out.reserve(length_);
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.insert(out.end(), it->second, it->first);
  return out;
}

std::vector<PartitionM> enumerate_partitions(std::uint32_t n) {
  std::vector<PartitionM> out;
  PartitionM::Multiplicities current;
  // Choose the next part size from largest to smallest, so part lists come
  // out in descending lexicographic order.
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t remaining, std::uint32_t max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
      ++current[part];
      walk(remaining - part, part);
      if (--current[part] == 0) current.erase(part);
    }
  };
  walk(n, n);
  return out;
}

BigInt waring_coefficient(std::uint32_t k, const PartitionM& lam) {
  require(k >= 1, "waring_coefficient requires k >= 1");
  require(lam.target() == k, "partition of " + std::to_string(lam.target()) + " given for k = " + std::to_string(k));

  const std::uint32_t l = lam.length();
  BigInt den = 1;
  for (const auto& [part, m] : lam.parts()) den *= factorial(m);
  BigRational value(BigInt(k) * factorial(l - 1), den);
  value.canonicalize();
  if (!is_integer(value))
    fail(ErrorCode::integrality, "Waring coefficient " + to_string(value) + " is not an integer");
  BigInt out = value.get_num();
  return (k - l) % 2 == 0 ? out : BigInt(-out);
}

}  // namespace chebwaring
