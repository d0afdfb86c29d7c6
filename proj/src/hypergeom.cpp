#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>

#include <string>

namespace chebwaring {

BigRational pochhammer(const BigRational& a, std::uint32_t n) {
  BigRational out = 1;
  BigRational factor = a;
  for (std::uint32_t i = 0; i < n; ++i) {
    out *= factor;
    factor += 1;
  }
  return out;
}

BigInt factorial(std::uint32_t n) { return pochhammer(BigRational(1), n).get_num(); }

BigRational reciprocal_factorial(std::int64_t x) {
  if (x < 0) return 0;
  return BigRational(BigInt(1), factorial(static_cast<std::uint32_t>(x)));
}

BigRational hyp2f1_terminating(std::uint32_t n, const BigRational& a, const BigRational& c) {
  const BigRational minus_n = -BigRational(n);
  BigRational sum = 0;
  BigRational numerator = 1;    // (-n)_j (a)_j
  BigRational denominator = 1;  // (c)_j j!
  for (std::uint32_t j = 0;; ++j) {
    if (numerator == 0) break;
    if (denominator == 0)
      fail(ErrorCode::pole, "(c)_" + std::to_string(j) + " vanishes before the series terminates (c = " +
                                to_string(c) + ", n = " + std::to_string(n) + ")");
    sum += numerator / denominator;
    numerator *= (minus_n + j) * (a + j);
    denominator *= (c + j) * (j + 1);
  }
  return sum;
}

BigRational chu_vandermonde_rhs(std::uint32_t n, const BigRational& a, const BigRational& c) {
  BigRational den = pochhammer(c, n);
  if (den == 0) fail(ErrorCode::pole, "(c)_n = 0 for c = " + to_string(c) + ", n = " + std::to_string(n));
  return pochhammer(c - a, n) / den;
}

namespace {

void check_lemma_domain(std::uint32_t k, std::uint32_t j) {
  if (k == 0 || j / 2 > k - 1)
    fail(ErrorCode::domain, "lemma requires floor(j/2) <= k-1 (k = " + std::to_string(k) +
                                ", j = " + std::to_string(j) + ")");
}

BigInt pow2(std::uint32_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

BigRational lemma_lhs(std::uint32_t k, std::uint32_t j) {
  check_lemma_domain(k, j);
  BigRational sum = 0;
  for (std::uint32_t i = 0; 2 * i <= j; ++i) {
    BigRational term(factorial(k - i - 1) * pow2(j - 2 * i), factorial(j - 2 * i) * factorial(i));
    term.canonicalize();
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigRational lemma_rhs(std::uint32_t k, std::uint32_t j) {
  check_lemma_domain(k, j);
  const std::uint32_t lo = j / 2;
  const std::uint32_t hi = (j + 1) / 2;
  BigInt product = 1;
  for (std::uint32_t i = 0; i < lo; ++i) product *= BigInt(2 * static_cast<long>(k)) - 2 * hi - 1 - 2 * i;
  BigRational out(factorial(k - lo - 1) * pow2(hi) * product, factorial(j));
  out.canonicalize();
  return out;
}

BigRational pochhammer_split_even(const BigRational& a, std::uint32_t n) {
  return pochhammer(a / 2, n) * pochhammer((a + 1) / 2, n) * BigRational(pow2(2 * n));
}

BigRational pochhammer_split_odd(const BigRational& a, std::uint32_t n) {
  return pochhammer(a / 2, n + 1) * pochhammer((a + 1) / 2, n) * BigRational(pow2(2 * n + 1));
}

BigRational pochhammer_reflect(const BigRational& a, std::uint32_t N, std::uint32_t n) {
  require(n <= N, "pochhammer_reflect requires n <= N");
  BigRational den = pochhammer(-a - N + 1, n);
  if (den == 0)
    fail(ErrorCode::pole, "(-a-N+1)_n = 0 for a = " + to_string(a) + ", N = " + std::to_string(N) +
                              ", n = " + std::to_string(n));
  BigRational out = pochhammer(a, N) / den;
  return n % 2 == 0 ? out : BigRational(-out);
}

}  // namespace chebwaring
