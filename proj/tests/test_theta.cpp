#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>
#include <chebwaring/sequences.hpp>
#include <chebwaring/theta.hpp>

#include <doctest.h>

#include <map>
#include <vector>

using namespace chebwaring;

namespace {

MultiPoly P(const char* text) { return parse_poly(text); }

// Independent route to theta: treat X = W_n W_{n+m} and O = Omega as formal
// letters. The two-letter alphabet {W_n^2, W_{n+m}^2} has e1 = V_m X + U_m^2 O
// and e2 = X^2, so its power sums follow q_k = e1 q_{k-1} - e2 q_{k-2} with
// q_0 = 2, q_1 = e1. theta_{k,r}(m) is the coefficient of O^{k-r} X^r in q_k.
std::vector<std::vector<MultiPoly>> theta_by_two_letter_newton(int k_max, int m) {
  const MultiPoly X = MultiPoly::variable("X_");
  const MultiPoly O = MultiPoly::variable("O_");
  const MultiPoly e1 = seq_V(m) * X + seq_U(m) * seq_U(m) * O;
  const MultiPoly e2 = X * X;
  std::vector<MultiPoly> q{MultiPoly(2), e1};
  for (int k = 2; k <= k_max; ++k) q.push_back(e1 * q[k - 1] - e2 * q[k - 2]);

  std::vector<std::vector<MultiPoly>> out(k_max + 1);
  const Symbol xs("X_"), os("O_");
  for (int k = 1; k <= k_max; ++k) {
    out[k].resize(k + 1);
    for (const auto& [mono, c] : q[k].terms()) {
      const auto r = mono.exponent(xs);
      const auto o = mono.exponent(os);
      REQUIRE(static_cast<int>(r + o) == k);
      Monomial rest;
      for (const auto& [id, e] : mono.factors())
        if (id != xs.id() && id != os.id()) rest = rest * Monomial(Symbol::from_id(id), e);
      out[k][r] += MultiPoly(rest, c);
    }
  }
  return out;
}

// The m = 1 closed form summed over 0 <= 2j <= k instead of 0 <= 2j <= r,
// accumulated per power of p.
MultiPoly theta_m1_wide_bound(int k, int r) {
  std::map<int, BigRational> by_degree;
  for (int j = 0; 2 * j <= k; ++j) {
    BigRational s = BigRational(k) * BigRational(factorial(static_cast<std::uint32_t>(k - 1 - j))) *
                    reciprocal_factorial(k - r) * reciprocal_factorial(j) * reciprocal_factorial(r - 2 * j);
    if (j % 2 == 1) s = -s;
    if (s != 0) by_degree[r - 2 * j] += s;
  }
  MultiPoly out;
  for (const auto& [d, s] : by_degree) {
    REQUIRE(is_integer(s));
    out += MultiPoly(Monomial(Symbol("p"), static_cast<std::uint32_t>(d)), s.get_num());
  }
  return out;
}

}  // namespace

TEST_CASE("k = 1 reproduces the fundamental identity coefficients") {
  for (int m = 0; m <= 6; ++m) {
    CHECK(theta_general(1, 1, m) == seq_V(m));
    CHECK(theta_general(1, 0, m) == seq_U(m) * seq_U(m));
  }
}

TEST_CASE("worked values") {
  CHECK(theta_general(2, 1, 1) == P("2*p"));
  CHECK(theta_m1(2, 2) == P("p^2 - 2"));
  CHECK(theta_m1(2, 0) == MultiPoly(1));
  CHECK(theta_m1(1, 1) == P("p"));
  CHECK(theta_m2(1, 1) == P("p^2 - 2"));
  CHECK(theta_m2(1, 0) == P("p^2"));
  CHECK(theta_m2(2, 2) == P("p^4 - 4*p^2 + 2"));
  CHECK(theta_gp(1, 1) == P("p^2 - 2"));
  CHECK(theta_gp(1, 0) == P("p^2"));
  CHECK(theta_gp(2, 2) == P("p^4 - 4*p^2 + 2"));
}

TEST_CASE("k = 2 matches squaring the k = 1 identity") {
  // (V X + U^2 O)^2 - 2 X^2 = (V^2 - 2) X^2 + 2 V U^2 O X + U^4 O^2
  for (int m = 0; m <= 6; ++m) {
    const MultiPoly v = seq_V(m);
    const MultiPoly u2 = seq_U(m) * seq_U(m);
    CHECK(theta_general(2, 2, m) == v * v - MultiPoly(2));
    CHECK(theta_general(2, 1, m) == MultiPoly(2) * v * u2);
    CHECK(theta_general(2, 0, m) == u2 * u2);
  }
}

TEST_CASE("general theta matches the two-letter Newton oracle") {
  for (int m = 0; m <= 5; ++m) {
    const auto oracle = theta_by_two_letter_newton(8, m);
    for (int k = 1; k <= 8; ++k)
      for (int r = 0; r <= k; ++r) CHECK(theta_general(k, r, m) == oracle[k][r]);
  }
}

TEST_CASE("specializations at m = 1 and m = 2") {
  for (int k = 1; k <= 12; ++k)
    for (int r = 0; r <= k; ++r) {
      CHECK(theta_general(k, r, 1) == theta_m1(k, r));
      CHECK(theta_general(k, r, 2) == theta_m2(k, r));
    }
}

TEST_CASE("closed form with floor and ceiling brackets equals the m = 2 form") {
  for (int k = 1; k <= 25; ++k)
    for (int r = 0; r <= k; ++r) CHECK(theta_m2(k, r) == theta_gp(k, r));
}

TEST_CASE("widening the m = 1 summation bound adds nothing") {
  for (int k = 1; k <= 12; ++k)
    for (int r = 0; r <= k; ++r) CHECK(theta_m1_wide_bound(k, r) == theta_m1(k, r));
}

TEST_CASE("parity of theta in p is m*r mod 2") {
  const Symbol p("p");
  for (int m = 0; m <= 6; ++m)
    for (int k = 1; k <= 7; ++k)
      for (int r = 0; r <= k; ++r) {
        const auto value = theta_general(k, r, m);
        for (const auto& [mono, c] : value.terms()) CHECK(mono.exponent(p) % 2 == static_cast<unsigned>((m * r) % 2));
      }
}

TEST_CASE("m = 0 degenerates to a single surviving coefficient") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(theta_general(k, k, 0) == MultiPoly(2));
    for (int r = 0; r < k; ++r) CHECK(theta_general(k, r, 0).is_zero());
  }
}

TEST_CASE("dispatch and validation") {
  const auto t = theta(ThetaSource::gp, 3, 2);
  CHECK(t.k == 3);
  CHECK(t.r == 2);
  CHECK(t.m == 2);
  CHECK(t.value == theta_m2(3, 2));
  CHECK(theta(ThetaSource::general, 3, 1, 4).value == theta_general(3, 1, 4));
  CHECK(parse_theta_source("m1") == ThetaSource::m1);
  CHECK_THROWS_AS(parse_theta_source("m3"), Error);
  CHECK_THROWS_AS(theta_general(0, 0, 1), Error);
  CHECK_THROWS_AS(theta_general(2, 3, 1), Error);
  CHECK_THROWS_AS(theta_general(2, -1, 1), Error);
  CHECK_THROWS_AS(theta_general(2, 1, -1), Error);
  CHECK_THROWS_AS(theta_gp(0, 0), Error);
}

TEST_CASE("fault injection perturbs only the targeted coefficient") {
  const MultiPoly clean = theta_general(3, 1, 2);
  testing::set_theta_fault(testing::ThetaFault{3, 1});
  CHECK(theta_general(3, 1, 2) == clean + MultiPoly(1));
  CHECK(theta_general(3, 2, 2) == theta_m2(3, 2));
  testing::set_theta_fault(std::nullopt);
  CHECK(theta_general(3, 1, 2) == clean);
  clear_theta_cache();
  CHECK(theta_general(3, 1, 2) == clean);
}
