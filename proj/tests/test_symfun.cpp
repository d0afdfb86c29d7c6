#include <chebwaring/error.hpp>
#include <chebwaring/partitions.hpp>
#include <chebwaring/symfun.hpp>

#include <doctest.h>

using namespace chebwaring;

namespace {
MultiPoly P(const char* text) { return parse_poly(text); }
}  // namespace

TEST_CASE("Waring expansions of low power sums") {
  CHECK(power_sum_waring(1).expr == P("e1"));
  CHECK(power_sum_waring(2).expr == P("e1^2 - 2*e2"));
  CHECK(power_sum_waring(3).expr == P("e1^3 - 3*e1*e2 + 3*e3"));
  CHECK(power_sum_waring(3).degree == 3);
  CHECK_THROWS_AS(power_sum_waring(0), Error);
}

TEST_CASE("Newton recurrence") {
  CHECK(power_sum_newton(1, 1).expr == P("e1"));
  CHECK(power_sum_newton(1, 5).expr == P("e1"));
  CHECK(power_sum_newton(2, 2).expr == P("e1^2 - 2*e2"));
  CHECK(power_sum_newton(4, 2).expr == P("e1^4 - 4*e1^2*e2 + 2*e2^2"));
  CHECK(power_sum_newton(2, 1).expr == P("e1^2"));
  CHECK_THROWS_AS(power_sum_newton(0, 2), Error);
  CHECK_THROWS_AS(power_sum_newton(2, 0), Error);
}

TEST_CASE("Waring equals Newton for k <= 20") {
  for (std::uint32_t k = 1; k <= 20; ++k) {
    const auto waring = power_sum_waring(k);
    CHECK(waring.expr == power_sum_newton(k, k).expr);
    // extra letters do not change p_k once num_vars >= k
    CHECK(waring.expr == power_sum_newton(k, k + 3).expr);
    CHECK(is_weight_homogeneous(waring));
    CHECK(is_weight_homogeneous(power_sum_newton(k, 2)));
  }
}

TEST_CASE("homogeneity check rejects foreign terms") {
  CHECK_FALSE(is_weight_homogeneous({2, P("e1^2 + e1")}));
  CHECK_FALSE(is_weight_homogeneous({2, P("e3")}));
  CHECK_FALSE(is_weight_homogeneous({2, P("x1^2")}));
  CHECK(is_weight_homogeneous({2, P("e1^2 - 2*e2")}));
}

TEST_CASE("two-letter specialization") {
  const MultiPoly x1 = MultiPoly::variable("x1");
  const MultiPoly x2 = MultiPoly::variable("x2");
  CHECK(specialize_two_letters(power_sum_waring(2), x1, x2) == P("x1^2 + x2^2"));
  CHECK(specialize_two_letters(power_sum_waring(5), x1, x2) == pow(x1, 5) + pow(x2, 5));
  CHECK(specialize_two_letters(power_sum_waring(3), MultiPoly(2), MultiPoly(3)) == MultiPoly(35));
  for (std::uint32_t k = 1; k <= 12; ++k)
    CHECK(specialize_two_letters(power_sum_waring(k), x1, x2) == pow(x1, k) + pow(x2, k));
}

TEST_CASE("only partitions 1^{k-2j} 2^j survive two letters") {
  const MultiPoly x1 = MultiPoly::variable("x1");
  const MultiPoly x2 = MultiPoly::variable("x2");
  const MultiPoly e1 = x1 + x2;
  const MultiPoly e2 = x1 * x2;
  for (std::uint32_t k = 1; k <= 12; ++k) {
    MultiPoly restricted;
    for (const auto& lam : enumerate_partitions(k)) {
      if (lam.parts().rbegin()->first > 2) continue;
      restricted += MultiPoly(waring_coefficient(k, lam)) * pow(e1, lam.multiplicity(1)) * pow(e2, lam.multiplicity(2));
    }
    CHECK(restricted == specialize_two_letters(power_sum_waring(k), x1, x2));
  }
}
