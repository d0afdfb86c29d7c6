#include <chebwaring/error.hpp>
#include <chebwaring/partitions.hpp>
#include <chebwaring/symfun.hpp>

#include <charconv>
#include <vector>

namespace chebwaring {

std::string elementary_name(std::uint32_t i) { return "e" + std::to_string(i); }

SymExpansion power_sum_waring(std::uint32_t k) {
  require(k >= 1, "power sums are expanded for k >= 1 only");
  SymExpansion out{k, {}};
  for (const auto& lam : enumerate_partitions(k)) {
    Monomial m;
    for (const auto& [part, mult] : lam.parts()) m = m * Monomial(Symbol(elementary_name(part)), mult);
    out.expr += MultiPoly(m, waring_coefficient(k, lam));
  }
  return out;
}

SymExpansion power_sum_newton(std::uint32_t k, std::uint32_t num_vars) {
  require(k >= 1, "power sums are expanded for k >= 1 only");
  require(num_vars >= 1, "alphabet must have at least one letter");
  std::vector<MultiPoly> p(k + 1);
  for (std::uint32_t d = 1; d <= k; ++d) {
    MultiPoly pd;
    for (std::uint32_t i = 1; i <= std::min(d, num_vars); ++i) {
      const Monomial e_i(Symbol(elementary_name(i)));
      const BigInt sign = i % 2 == 1 ? 1 : -1;
      if (i < d) {
        pd.add_scaled(p[d - i], sign, e_i);
      } else {
        pd += MultiPoly(e_i, sign * d);
      }
    }
    p[d] = std::move(pd);
  }
  return {k, std::move(p[k])};
}

MultiPoly specialize_two_letters(const SymExpansion& exp, const MultiPoly& u, const MultiPoly& v) {
  Bindings bindings;
  bindings.emplace_back(Symbol(elementary_name(1)), u + v);
  bindings.emplace_back(Symbol(elementary_name(2)), u * v);
  for (std::uint32_t i = 3; i <= exp.degree; ++i) bindings.emplace_back(Symbol(elementary_name(i)), MultiPoly());
  return substitute(exp.expr, bindings);
}

bool is_weight_homogeneous(const SymExpansion& exp) {
  for (const auto& [m, c] : exp.expr.terms()) {
    std::uint32_t weight = 0;
    for (const auto& [id, e] : m.factors()) {
      const std::string name = Symbol::from_id(id).name();
      std::uint32_t index = 0;
      if (name.size() < 2 || name[0] != 'e') return false;
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (ec != std::errc{} || ptr != name.data() + name.size() || index == 0 || index > exp.degree) return false;
      weight += index * e;
    }
    if (weight != exp.degree) return false;
  }
  return true;
}

}  // namespace chebwaring
