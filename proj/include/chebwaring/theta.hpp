#pragma once

// The coefficients theta_{k,r}(m) of
//   W_n^{2k} + W_{n+m}^{2k} = sum_r theta_{k,r}(m) Omega^{k-r} (W_n W_{n+m})^r
// and their closed forms at m = 1 and m = 2.
//
// All sums use 1/x! = 0 for negative integers x. Terms are accumulated as
// exact rationals and the total is required to have integer coefficients.

#include <chebwaring/multipoly.hpp>

#include <optional>
#include <string>

namespace chebwaring {

enum class ThetaSource { general, m1, m2, gp };

const char* to_string(ThetaSource source) noexcept;
ThetaSource parse_theta_source(const std::string& text);

struct ThetaCoefficient {
  int k;
  int r;
  int m;
  ThetaSource source;
  MultiPoly value;  // in p
};

/// sum_{0<=2j<=k} (-1)^j k(k-j-1)! / (j!(k-r)!(r-2j)!) V_m^{r-2j} U_m^{2k-2r}.
/// Requires k >= 1, 0 <= r <= k, m >= 0.
MultiPoly theta_general(int k, int r, int m);

/// sum_{0<=2j<=r} (-1)^j k(k-1-j)! / ((k-r)! j! (r-2j)!) p^{r-2j}.
MultiPoly theta_m1(int k, int r);

/// sum_{0<=2j<=k} (-1)^j k(k-j-1)! / (j!(k-r)!(r-2j)!) (p^2-2)^{r-2j} p^{2k-2r}.
MultiPoly theta_m2(int k, int r);

/// The single-sum form over lambda with the floor/ceiling product; equal to
/// theta_m2.
MultiPoly theta_gp(int k, int r);

/// Dispatches on source. For m1, m2 and gp the index m is implied and the
/// argument is ignored.
ThetaCoefficient theta(ThetaSource source, int k, int r, int m = 0);

/// Drops every memoized theta value.
void clear_theta_cache();

namespace testing {

/// Fault injection for exercising the verifier: while set, theta_general
/// adds 1 to its result for matching (k, r). A negative field matches all.
struct ThetaFault {
  int k = -1;
  int r = -1;
};

void set_theta_fault(std::optional<ThetaFault> fault);
std::optional<ThetaFault> theta_fault();

}  // namespace testing

}  // namespace chebwaring
