#pragma once

// Exact rational Pochhammer symbols and terminating 2F1 series at unit
// argument, together with both sides of the factorial/power-of-two sum
// identity that links the two formulas for theta_{k,r}(2).

#include <chebwaring/numeric.hpp>

#include <cstdint>

namespace chebwaring {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
BigRational pochhammer(const BigRational& a, std::uint32_t n);

/// n! as (1)_n.
BigInt factorial(std::uint32_t n);

/// 1/x!, or 0 when x is a negative integer.
BigRational reciprocal_factorial(std::int64_t x);

/// sum_{j=0}^{n} (-n)_j (a)_j / ((c)_j j!). The sum stops as soon as (-n)_j
/// vanishes, so denominators beyond that point are never formed. Throws
/// Error(pole) if a (c)_j needed before termination is zero.
BigRational hyp2f1_terminating(std::uint32_t n, const BigRational& a, const BigRational& c);

/// (c-a)_n / (c)_n. Throws Error(pole) when (c)_n = 0.
BigRational chu_vandermonde_rhs(std::uint32_t n, const BigRational& a, const BigRational& c);

/// sum_{i=0}^{floor(j/2)} (-1)^i (k-i-1)! 2^(j-2i) / ((j-2i)! i!).
/// Requires k >= 1 and floor(j/2) <= k-1 (Error(domain) otherwise).
BigRational lemma_lhs(std::uint32_t k, std::uint32_t j);

/// (k-floor(j/2)-1)!/j! * 2^ceil(j/2) * prod_{i=0}^{floor(j/2)-1} (2k-2ceil(j/2)-1-2i).
/// Same domain as lemma_lhs.
BigRational lemma_rhs(std::uint32_t k, std::uint32_t j);

/// (a/2)_n ((a+1)/2)_n 2^(2n), which equals (a)_{2n}.
BigRational pochhammer_split_even(const BigRational& a, std::uint32_t n);

/// (a/2)_{n+1} ((a+1)/2)_n 2^(2n+1), which equals (a)_{2n+1}.
BigRational pochhammer_split_odd(const BigRational& a, std::uint32_t n);

/// (-1)^n (a)_N / (-a-N+1)_n, which equals (a)_{N-n}. Requires n <= N;
/// throws Error(pole) when the denominator vanishes.
BigRational pochhammer_reflect(const BigRational& a, std::uint32_t N, std::uint32_t n);

}  // namespace chebwaring
