#include <chebwaring/error.hpp>
#include <chebwaring/partitions.hpp>

#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>
#include <vector>

using namespace chebwaring;

namespace {

// Independent generator: every nonincreasing list of positive parts summing to n.
std::vector<std::vector<std::uint32_t>> brute_force_partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest, std::uint32_t cap) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t part = 1; part <= std::min(rest, cap); ++part) {
      current.push_back(part);
      rec(rest - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// e_i of a concrete alphabet by summing over all subsets.
std::vector<BigInt> elementary_by_subsets(const std::vector<long>& xs) {
  std::vector<BigInt> e(xs.size() + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << xs.size()); ++mask) {
    BigInt product = 1;
    std::size_t size = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask & (1u << i)) {
        product *= xs[i];
        ++size;
      }
    e[size] += product;
  }
  return e;
}

}  // namespace

TEST_CASE("small enumerations") {
  const auto zero = enumerate_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].parts().empty());
  CHECK(zero[0].target() == 0);
  CHECK(zero[0].length() == 0);

  const auto three = enumerate_partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == PartitionM(PartitionM::Multiplicities{{3, 1}}));
  CHECK(three[1] == PartitionM(PartitionM::Multiplicities{{1, 1}, {2, 1}}));
  CHECK(three[2] == PartitionM(PartitionM::Multiplicities{{1, 3}}));

  CHECK(enumerate_partitions(7).size() == 15);
}

TEST_CASE("enumeration matches brute force and canonical order") {
  for (std::uint32_t n = 0; n <= 25; ++n) {
    const auto parts = enumerate_partitions(n);
    auto expected = brute_force_partitions(n);
    REQUIRE(parts.size() == expected.size());
    std::sort(expected.begin(), expected.end(), std::greater<>());
    std::set<std::vector<std::uint32_t>> unique;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& lam = parts[i];
      CHECK(lam.target() == n);
      std::uint32_t weighted = 0, length = 0;
      for (const auto& [part, m] : lam.parts()) {
        CHECK(m >= 1);
        weighted += part * m;
        length += m;
      }
      CHECK(weighted == n);
      CHECK(lam.length() == length);
      CHECK(lam.part_list() == expected[i]);
      unique.insert(lam.part_list());
    }
    CHECK(unique.size() == parts.size());
  }
}

TEST_CASE("Waring coefficients") {
  CHECK(waring_coefficient(2, PartitionM(PartitionM::Multiplicities{{1, 2}})) == 1);
  CHECK(waring_coefficient(2, PartitionM(PartitionM::Multiplicities{{2, 1}})) == -2);
  CHECK(waring_coefficient(3, PartitionM(PartitionM::Multiplicities{{1, 1}, {2, 1}})) == -3);
  CHECK(waring_coefficient(3, PartitionM(PartitionM::Multiplicities{{3, 1}})) == 3);
  CHECK(waring_coefficient(1, PartitionM(PartitionM::Multiplicities{{1, 1}})) == 1);
}

TEST_CASE("Waring coefficients are integers for every partition of k <= 20") {
  for (std::uint32_t k = 1; k <= 20; ++k)
    for (const auto& lam : enumerate_partitions(k)) CHECK_NOTHROW(waring_coefficient(k, lam));
}

TEST_CASE("Waring expansion reproduces power sums of concrete alphabets") {
  const std::vector<std::vector<long>> alphabets = {{2, 3}, {1, -2, 5}, {3, 1, 4, -1, 5}, {7, -3, 2, 2, -6, 1}};
  for (const auto& xs : alphabets) {
    const auto e = elementary_by_subsets(xs);
    for (std::uint32_t k = 1; k <= 10; ++k) {
      BigInt direct = 0;
      for (long x : xs) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), BigInt(x).get_mpz_t(), k);
        direct += power;
      }
      BigInt via_waring = 0;
      for (const auto& lam : enumerate_partitions(k)) {
        BigInt term = waring_coefficient(k, lam);
        for (const auto& [part, m] : lam.parts()) {
          BigInt ei = part < e.size() ? e[part] : BigInt(0);
          BigInt power;
          mpz_pow_ui(power.get_mpz_t(), ei.get_mpz_t(), m);
          term *= power;
        }
        via_waring += term;
      }
      CHECK(via_waring == direct);
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(waring_coefficient(0, PartitionM{}), Error);
  CHECK_THROWS_AS(waring_coefficient(3, PartitionM(PartitionM::Multiplicities{{1, 2}})), Error);
  CHECK_THROWS_AS(PartitionM(PartitionM::Multiplicities{{0, 1}}), Error);
  CHECK_THROWS_AS(PartitionM(PartitionM::Multiplicities{{2, 0}}), Error);
}
