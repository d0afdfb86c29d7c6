#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Every value is kept in canonical form (no zero coefficients,
// no zero exponents), so structural equality is mathematical equality.

#include <chebwaring/numeric.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chebwaring {

/// A formal indeterminate. Names are interned in an append-only process-wide
/// registry so that monomials can be keyed by small integer ids; ordering
/// compares the names, not the ids.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  std::uint32_t id() const noexcept { return id_; }
  std::string name() const;

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend bool operator<(Symbol a, Symbol b);

  static Symbol from_id(std::uint32_t id);

 private:
  struct FromId {};
  Symbol(FromId, std::uint32_t id) noexcept : id_(id) {}

  std::uint32_t id_;
};

class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (symbol id, exponent)

  Monomial() = default;  // the constant monomial 1
  Monomial(Symbol s, std::uint32_t exponent = 1);
  Monomial(std::initializer_list<std::pair<Symbol, std::uint32_t>> factors);

  bool is_constant() const noexcept { return factors_.empty(); }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t exponent(Symbol s) const noexcept;
  std::span<const Factor> factors() const noexcept { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;  // sorted by id, exponents > 0
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

class MultiPoly {
 public:
  using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

  MultiPoly() = default;  // zero
  MultiPoly(long constant);
  MultiPoly(const BigInt& constant);
  MultiPoly(const Monomial& m, const BigInt& coefficient = 1);

  static MultiPoly variable(std::string_view name);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  BigInt coefficient(const Monomial& m) const;
  /// Highest exponent of s over all terms; 0 for the zero polynomial.
  std::uint32_t degree_in(Symbol s) const;
  std::uint32_t total_degree() const;
  /// Variables occurring with nonzero exponent, in name order.
  std::vector<Symbol> variables() const;

  MultiPoly& operator+=(const MultiPoly& g);
  MultiPoly& operator-=(const MultiPoly& g);
  MultiPoly& operator*=(const MultiPoly& g);
  MultiPoly& operator*=(const BigInt& c);

  /// Adds c * m * g in place without materializing the product.
  void add_scaled(const MultiPoly& g, const BigInt& c, const Monomial& m = {});

  /// Divides every coefficient by d; throws Error(integrality) unless each
  /// division is exact.
  void divide_exact(const BigInt& d);

  friend MultiPoly operator+(MultiPoly f, const MultiPoly& g) { return f += g; }
  friend MultiPoly operator-(MultiPoly f, const MultiPoly& g) { return f -= g; }
  friend MultiPoly operator*(const MultiPoly& f, const MultiPoly& g);
  friend MultiPoly operator-(MultiPoly f);

  friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
    return f.terms_ == g.terms_;
  }

 private:
  void accumulate(const Monomial& m, const BigInt& c);
  void prune();

  TermMap terms_;
};

/// f^e by repeated squaring; f^0 = 1 for every f including 0.
MultiPoly pow(const MultiPoly& f, std::uint32_t e);

using Bindings = std::vector<std::pair<Symbol, MultiPoly>>;

/// Replaces each bound variable by its polynomial; unbound variables persist.
/// A variable bound twice uses the last binding.
MultiPoly substitute(const MultiPoly& f, const Bindings& bindings);

/// Canonical text: terms in descending graded-lex order with variables
/// collated by name, each coefficient with an explicit sign, e.g.
/// "+1*p^2 -2". The zero polynomial is "0".
std::string serialize(const MultiPoly& f);

/// Reads the canonical form back. Also accepts friendlier input such as
/// "p^2 - 2", "a*b + 3" or "-x1*x2^3".
MultiPoly parse_poly(std::string_view text);

}  // namespace chebwaring
