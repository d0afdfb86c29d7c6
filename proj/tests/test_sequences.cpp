#include <chebwaring/error.hpp>
#include <chebwaring/sequences.hpp>

#include <doctest.h>

#include <thread>
#include <vector>

using namespace chebwaring;

namespace {
MultiPoly P(const char* text) { return parse_poly(text); }
const MultiPoly p = MultiPoly::variable("p");
const MultiPoly a = MultiPoly::variable("a");
const MultiPoly b = MultiPoly::variable("b");
}  // namespace

TEST_CASE("initial values") {
  CHECK(seq_U(0).is_zero());
  CHECK(seq_U(1) == MultiPoly(1));
  CHECK(seq_U(2) == p);
  CHECK(seq_U(3) == P("p^2 - 1"));
  CHECK(seq_V(0) == MultiPoly(2));
  CHECK(seq_V(1) == p);
  CHECK(seq_V(2) == P("p^2 - 2"));
  CHECK(seq_V(3) == P("p^3 - 3*p"));
  CHECK(seq_W(0) == P("2*b"));
  CHECK(seq_W(1) == P("a + b*p"));
  CHECK(seq_W(2) == P("a*p + b*p^2 - 2*b"));
}

TEST_CASE("Omega") {
  CHECK(serialize(omega()) == "-1*b^2*p^2 +1*a^2 +4*b^2");
  CHECK(substitute(omega(), {{Symbol("a"), MultiPoly(1)}, {Symbol("b"), MultiPoly()}}) == MultiPoly(1));
  CHECK(substitute(omega(), {{Symbol("a"), MultiPoly()}, {Symbol("b"), MultiPoly(1)}, {Symbol("p"), MultiPoly(2)}})
            .is_zero());
}

TEST_CASE("recurrences, degrees and the Pell relation") {
  const MultiPoly p2_minus_4 = p * p - MultiPoly(4);
  const Symbol ps("p");
  for (int n = 0; n <= 30; ++n) {
    if (n >= 2) {
      CHECK(seq_W(n) == p * seq_W(n - 1) - seq_W(n - 2));
      CHECK(seq_U(n) == p * seq_U(n - 1) - seq_U(n - 2));
      CHECK(seq_V(n) == p * seq_V(n - 1) - seq_V(n - 2));
    }
    if (n >= 1) {
      CHECK(seq_U(n).degree_in(ps) == static_cast<std::uint32_t>(n - 1));
      CHECK(seq_V(n).degree_in(ps) == static_cast<std::uint32_t>(n));
    }
    CHECK(seq_W(n) == seq_W_recurrence(n));
    CHECK(seq_W(n) == a * seq_U(n) + b * seq_V(n));
    CHECK(seq_V(n) * seq_V(n) - p2_minus_4 * seq_U(n) * seq_U(n) == MultiPoly(4));
  }
}

TEST_CASE("fundamental identity for m, n <= 12") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n) {
      const MultiPoly wn = seq_W(n);
      const MultiPoly wnm = seq_W(n + m);
      CHECK(wn * wn + wnm * wnm == seq_V(m) * wn * wnm + seq_U(m) * seq_U(m) * omega());
    }
}

TEST_CASE("sequence elements validate their invariants") {
  for (auto kind : {SeqKind::U, SeqKind::V, SeqKind::W})
    for (int n = 0; n <= 10; ++n) {
      const auto el = make_seq_element(kind, n);
      CHECK(el.kind == kind);
      CHECK(el.index == n);
      CHECK(el.value == seq(kind, n));
    }
}

TEST_CASE("negative indices and bad kinds are rejected") {
  CHECK_THROWS_AS(seq_U(-1), Error);
  CHECK_THROWS_AS(seq_V(-3), Error);
  CHECK_THROWS_AS(seq_W(-1), Error);
  CHECK_THROWS_AS(seq_W_recurrence(-1), Error);
  CHECK_THROWS_AS(parse_seq_kind("T"), Error);
  CHECK(parse_seq_kind("W") == SeqKind::W);
}

TEST_CASE("indices beyond the cache cap are still computed") {
  const auto saved = sequence_cache_cap();
  set_sequence_cache_cap(4);
  const MultiPoly u40 = seq_U(40);
  const MultiPoly w40 = seq_W(40);
  set_sequence_cache_cap(saved);
  CHECK(u40 == seq_U(40));
  CHECK(w40 == seq_W_recurrence(40));
}

TEST_CASE("concurrent readers see identical values") {
  std::vector<std::vector<std::string>> seen(8);
  std::vector<std::jthread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int n = 60; n >= 0; --n) seen[t].push_back(serialize(seq_W(n + t)) + serialize(seq_V(n)));
    });
  threads.clear();
  for (int t = 0; t < 8; ++t)
    for (int i = 0; i <= 60; ++i) {
      const int n = 60 - i;
      CHECK(seen[t][i] == serialize(seq_W_recurrence(n + t)) + serialize(seq_V(n)));
    }
}
