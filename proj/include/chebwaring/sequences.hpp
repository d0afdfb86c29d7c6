#pragma once

// The rescaled Chebyshev sequences
//   U_n = p U_{n-1} - U_{n-2},  U_0 = 0, U_1 = 1
//   V_n = p V_{n-1} - V_{n-2},  V_0 = 2, V_1 = p
// the combination W_n = a U_n + b V_n, and Omega = a^2 + 4b^2 - b^2 p^2,
// all as exact polynomials in p, a, b.
//
// Values up to the cache cap are memoized process-wide; each is computed once
// and never mutated afterwards, so concurrent callers are safe.

#include <chebwaring/multipoly.hpp>

#include <cstddef>
#include <string>

namespace chebwaring {

enum class SeqKind { U, V, W };

const char* to_string(SeqKind kind) noexcept;
/// "U", "V" or "W"; throws Error(invalid_argument) otherwise.
SeqKind parse_seq_kind(const std::string& text);

/// Negative indices throw Error(invalid_argument).
MultiPoly seq_U(int n);
MultiPoly seq_V(int n);
/// a U_n + b V_n.
MultiPoly seq_W(int n);
/// W_n from its own recurrence with W_0 = 2b, W_1 = a + bp; never cached.
MultiPoly seq_W_recurrence(int n);
MultiPoly seq(SeqKind kind, int n);

MultiPoly omega();

struct SeqElement {
  SeqKind kind;
  int index;
  MultiPoly value;
};

/// Builds the element and checks its structural invariants (degrees in p,
/// and for W agreement of both constructions); Error(internal) on failure.
SeqElement make_seq_element(SeqKind kind, int n);

/// Highest index kept in the memo cache (default 256). Larger indices are
/// computed on demand without being stored.
std::size_t sequence_cache_cap() noexcept;
void set_sequence_cache_cap(std::size_t cap);

}  // namespace chebwaring
