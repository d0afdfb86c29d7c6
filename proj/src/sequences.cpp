#include <chebwaring/error.hpp>
#include <chebwaring/sequences.hpp>

#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace chebwaring {

namespace {

std::atomic<std::size_t> g_cache_cap{256};

const MultiPoly& var_p() {
  static const MultiPoly p = MultiPoly::variable("p");
  return p;
}

// Memoized second-order recurrence x_n = p x_{n-1} - x_{n-2}.
class RecurrenceMemo {
 public:
  RecurrenceMemo(MultiPoly x0, MultiPoly x1) : x0_(std::move(x0)), x1_(std::move(x1)) {}

  MultiPoly get(int n) {
    require(n >= 0, "sequence index must be nonnegative, got " + std::to_string(n));
    const auto index = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return *values_[index];
    }
    if (index > g_cache_cap.load()) return uncached(index);

    std::unique_lock lock(mutex_);
    if (values_.empty()) {
      values_.push_back(std::make_shared<const MultiPoly>(x0_));
      values_.push_back(std::make_shared<const MultiPoly>(x1_));
    }
    while (values_.size() <= index) {
      const auto& prev = *values_[values_.size() - 1];
      const auto& prev2 = *values_[values_.size() - 2];
      values_.push_back(std::make_shared<const MultiPoly>(var_p() * prev - prev2));
    }
    return *values_[index];
  }

 private:
  MultiPoly uncached(std::size_t index) const {
    MultiPoly prev2 = x0_;
    MultiPoly prev = x1_;
    if (index == 0) return prev2;
    for (std::size_t i = 2; i <= index; ++i) {
      MultiPoly next = var_p() * prev - prev2;
      prev2 = std::move(prev);
      prev = std::move(next);
    }
    return prev;
  }

  MultiPoly x0_, x1_;
  std::shared_mutex mutex_;
  std::vector<std::shared_ptr<const MultiPoly>> values_;
};

RecurrenceMemo& u_memo() {
  static RecurrenceMemo memo(MultiPoly(0), MultiPoly(1));
  return memo;
}

RecurrenceMemo& v_memo() {
  static RecurrenceMemo memo(MultiPoly(2), var_p());
  return memo;
}

// a U_n + b V_n, stored per index once computed.
class CombinationMemo {
 public:
  MultiPoly get(std::size_t index) {
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size() && values_[index]) return *values_[index];
    }
    auto value = std::make_shared<const MultiPoly>(MultiPoly::variable("a") * u_memo().get(static_cast<int>(index)) +
                                                   MultiPoly::variable("b") * v_memo().get(static_cast<int>(index)));
    std::unique_lock lock(mutex_);
    if (values_.size() <= index) values_.resize(index + 1);
    if (!values_[index]) values_[index] = std::move(value);
    return *values_[index];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::shared_ptr<const MultiPoly>> values_;
};

CombinationMemo& w_memo() {
  static CombinationMemo memo;
  return memo;
}

}  // namespace

const char* to_string(SeqKind kind) noexcept {
  switch (kind) {
    case SeqKind::U: return "U";
    case SeqKind::V: return "V";
    case SeqKind::W: return "W";
  }
  return "?";
}

SeqKind parse_seq_kind(const std::string& text) {
  if (text == "U") return SeqKind::U;
  if (text == "V") return SeqKind::V;
  if (text == "W") return SeqKind::W;
  fail(ErrorCode::invalid_argument, "unknown sequence kind '" + text + "' (expected U, V or W)");
}

MultiPoly seq_U(int n) { return u_memo().get(n); }

MultiPoly seq_V(int n) { return v_memo().get(n); }

MultiPoly seq_W(int n) {
  require(n >= 0, "sequence index must be nonnegative, got " + std::to_string(n));
  if (static_cast<std::size_t>(n) > g_cache_cap.load())
    return MultiPoly::variable("a") * seq_U(n) + MultiPoly::variable("b") * seq_V(n);
  return w_memo().get(static_cast<std::size_t>(n));
}

MultiPoly seq_W_recurrence(int n) {
  require(n >= 0, "sequence index must be nonnegative, got " + std::to_string(n));
  MultiPoly prev2 = MultiPoly::variable("b") * MultiPoly(2);
  if (n == 0) return prev2;
  MultiPoly prev = MultiPoly::variable("a") + MultiPoly::variable("b") * var_p();
  for (int i = 2; i <= n; ++i) {
    MultiPoly next = var_p() * prev - prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

MultiPoly seq(SeqKind kind, int n) {
  switch (kind) {
    case SeqKind::U: return seq_U(n);
    case SeqKind::V: return seq_V(n);
    case SeqKind::W: return seq_W(n);
  }
  fail(ErrorCode::invalid_argument, "unknown sequence kind");
}

MultiPoly omega() {
  static const MultiPoly value = parse_poly("a^2 + 4*b^2 - b^2*p^2");
  return value;
}

SeqElement make_seq_element(SeqKind kind, int n) {
  SeqElement out{kind, n, seq(kind, n)};
  const Symbol p("p");
  auto check = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::internal, std::string(to_string(kind)) + "_" + std::to_string(n) + ": " + what);
  };
  switch (kind) {
    case SeqKind::U:
      if (n == 0) {
        check(out.value.is_zero(), "U_0 must vanish");
      } else {
        check(out.value.degree_in(p) == static_cast<std::uint32_t>(n - 1), "degree in p must be n-1");
      }
      break;
    case SeqKind::V:
      check(out.value.degree_in(p) == static_cast<std::uint32_t>(n), "degree in p must be n");
      break;
    case SeqKind::W:
      check(out.value == seq_W_recurrence(n), "a U_n + b V_n must satisfy the W recurrence");
      break;
  }
  return out;
}

std::size_t sequence_cache_cap() noexcept { return g_cache_cap.load(); }

void set_sequence_cache_cap(std::size_t cap) { g_cache_cap.store(cap); }

}  // namespace chebwaring
