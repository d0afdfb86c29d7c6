#pragma once

#include <chebwaring/multipoly.hpp>

#include <cstdint>
#include <string>

namespace chebwaring {

/// Name of the formal elementary symmetric polynomial e_i ("e1", "e2", ...).
std::string elementary_name(std::uint32_t i);

/// The power sum p_k written in the formal variables e_1..e_k.
struct SymExpansion {
  std::uint32_t degree = 0;
  MultiPoly expr;
};

/// p_k = sum over partitions of k of waring_coefficient * prod e_i^{m_i}.
/// k = 0 is rejected.
SymExpansion power_sum_waring(std::uint32_t k);

/// p_k from Newton's recurrence
///   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k
/// on an alphabet of num_vars letters, i.e. with e_i = 0 for i > num_vars.
SymExpansion power_sum_newton(std::uint32_t k, std::uint32_t num_vars);

/// Substitutes e_1 -> u + v, e_2 -> u v and e_i -> 0 for i >= 3.
MultiPoly specialize_two_letters(const SymExpansion& exp, const MultiPoly& u, const MultiPoly& v);

/// Every term has e-weight exactly exp.degree (weight of e_i is i) and no
/// e_i with i > degree occurs.
bool is_weight_homogeneous(const SymExpansion& exp);

}  // namespace chebwaring
