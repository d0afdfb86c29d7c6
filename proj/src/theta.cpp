#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>
#include <chebwaring/sequences.hpp>
#include <chebwaring/theta.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace chebwaring {

namespace {

// Collects rational multiples of integer polynomials and returns their sum,
// which must have integer coefficients.
class RationalSum {
 public:
  void add(const BigRational& scalar, MultiPoly poly) {
    if (scalar == 0 || poly.is_zero()) return;
    terms_.emplace_back(scalar, std::move(poly));
  }

  MultiPoly total() const {
    BigInt common = 1;
    for (const auto& [q, f] : terms_) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
    MultiPoly out;
    for (const auto& [q, f] : terms_) out.add_scaled(f, BigInt(q.get_num() * (common / q.get_den())));
    out.divide_exact(common);
    return out;
  }

 private:
  std::vector<std::pair<BigRational, MultiPoly>> terms_;
};

void check_indices(int k, int r) {
  require(k >= 1, "theta is defined for k >= 1, got k = " + std::to_string(k));
  require(r >= 0 && r <= k, "theta requires 0 <= r <= k, got r = " + std::to_string(r));
}

BigRational factorial_q(int n) { return BigRational(factorial(static_cast<std::uint32_t>(n))); }

const MultiPoly& var_p() {
  static const MultiPoly p = MultiPoly::variable("p");
  return p;
}

// Scalar k(k-j-1)! / (j!(k-r)!(r-2j)!) with sign (-1)^j, shared by the
// general sum and the m = 2 form.
BigRational theorem_scalar(int k, int r, int j) {
  BigRational s = BigRational(k) * factorial_q(k - j - 1) * reciprocal_factorial(j) *
                  reciprocal_factorial(k - r) * reciprocal_factorial(r - 2 * j);
  return j % 2 == 0 ? s : BigRational(-s);
}

MultiPoly compute_general(int k, int r, int m) {
  const MultiPoly v = seq_V(m);
  const MultiPoly u_power = pow(seq_U(m), static_cast<std::uint32_t>(2 * k - 2 * r));
  RationalSum sum;
  for (int j = 0; 2 * j <= k; ++j) {
    if (r - 2 * j < 0) continue;  // 1/(r-2j)! = 0
    sum.add(theorem_scalar(k, r, j), pow(v, static_cast<std::uint32_t>(r - 2 * j)) * u_power);
  }
  return sum.total();
}

MultiPoly compute_m1(int k, int r) {
  RationalSum sum;
  for (int j = 0; 2 * j <= r; ++j) {
    BigRational s = BigRational(k) * factorial_q(k - 1 - j) * reciprocal_factorial(k - r) *
                    reciprocal_factorial(j) * reciprocal_factorial(r - 2 * j);
    if (j % 2 == 1) s = -s;
    sum.add(s, pow(var_p(), static_cast<std::uint32_t>(r - 2 * j)));
  }
  return sum.total();
}

MultiPoly compute_m2(int k, int r) {
  const MultiPoly p_squared_minus_2 = var_p() * var_p() - MultiPoly(2);
  const MultiPoly p_power = pow(var_p(), static_cast<std::uint32_t>(2 * k - 2 * r));
  RationalSum sum;
  for (int j = 0; 2 * j <= k; ++j) {
    if (r - 2 * j < 0) continue;
    sum.add(theorem_scalar(k, r, j), pow(p_squared_minus_2, static_cast<std::uint32_t>(r - 2 * j)) * p_power);
  }
  return sum.total();
}

MultiPoly compute_gp(int k, int r) {
  RationalSum sum;
  for (int lambda = 0; lambda <= k; ++lambda) {
    if (r - lambda < 0) continue;  // 1/(r-lambda)! = 0
    const int lo = lambda / 2;
    const int hi = (lambda + 1) / 2;
    if (k - lo - 1 < 0)
      fail(ErrorCode::domain, "(k - floor(lambda/2) - 1)! undefined at k = " + std::to_string(k) +
                                  ", lambda = " + std::to_string(lambda));
    BigInt product = 1;
    for (int i = 0; i < lo; ++i) product *= 2 * k - 2 * hi - 1 - 2 * i;
    BigInt two_power;
    mpz_ui_pow_ui(two_power.get_mpz_t(), 2, static_cast<unsigned long>(hi));
    BigRational s = BigRational(BigInt(k) * factorial(static_cast<std::uint32_t>(k - lo - 1)) * two_power * product) *
                    reciprocal_factorial(k - r) * reciprocal_factorial(lambda) * reciprocal_factorial(r - lambda);
    if (lambda % 2 == 1) s = -s;
    sum.add(s, pow(var_p(), static_cast<std::uint32_t>(2 * k - 2 * lambda)));
  }
  return sum.total();
}

class ThetaCache {
 public:
  using Key = std::tuple<int, int, int, int>;  // source, k, r, m

  template <class Compute>
  MultiPoly get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return *it->second;
    }
    auto value = std::make_shared<const MultiPoly>(compute());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = values_.try_emplace(key, std::move(value));
    return *it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const MultiPoly>> values_;
};

ThetaCache& cache() {
  static ThetaCache instance;
  return instance;
}

std::mutex g_fault_mutex;
std::optional<testing::ThetaFault> g_fault;

bool fault_applies(int k, int r) {
  std::lock_guard lock(g_fault_mutex);
  return g_fault && (g_fault->k < 0 || g_fault->k == k) && (g_fault->r < 0 || g_fault->r == r);
}

}  // namespace

const char* to_string(ThetaSource source) noexcept {
  switch (source) {
    case ThetaSource::general: return "general";
    case ThetaSource::m1: return "m1";
    case ThetaSource::m2: return "m2";
    case ThetaSource::gp: return "gp";
  }
  return "?";
}

ThetaSource parse_theta_source(const std::string& text) {
  for (auto s : {ThetaSource::general, ThetaSource::m1, ThetaSource::m2, ThetaSource::gp})
    if (text == to_string(s)) return s;
  fail(ErrorCode::invalid_argument, "unknown theta source '" + text + "' (expected general, m1, m2 or gp)");
}

MultiPoly theta_general(int k, int r, int m) {
  check_indices(k, r);
  require(m >= 0, "theta requires m >= 0, got m = " + std::to_string(m));
  MultiPoly value = cache().get({static_cast<int>(ThetaSource::general), k, r, m},
                                [&] { return compute_general(k, r, m); });
  if (fault_applies(k, r)) value += MultiPoly(1);
  return value;
}

MultiPoly theta_m1(int k, int r) {
  check_indices(k, r);
  return cache().get({static_cast<int>(ThetaSource::m1), k, r, 1}, [&] { return compute_m1(k, r); });
}

MultiPoly theta_m2(int k, int r) {
  check_indices(k, r);
  return cache().get({static_cast<int>(ThetaSource::m2), k, r, 2}, [&] { return compute_m2(k, r); });
}

MultiPoly theta_gp(int k, int r) {
  check_indices(k, r);
  return cache().get({static_cast<int>(ThetaSource::gp), k, r, 2}, [&] { return compute_gp(k, r); });
}

ThetaCoefficient theta(ThetaSource source, int k, int r, int m) {
  switch (source) {
    case ThetaSource::general: return {k, r, m, source, theta_general(k, r, m)};
    case ThetaSource::m1: return {k, r, 1, source, theta_m1(k, r)};
    case ThetaSource::m2: return {k, r, 2, source, theta_m2(k, r)};
    case ThetaSource::gp: return {k, r, 2, source, theta_gp(k, r)};
  }
  fail(ErrorCode::invalid_argument, "unknown theta source");
}

void clear_theta_cache() { cache().clear(); }

namespace testing {

void set_theta_fault(std::optional<ThetaFault> fault) {
  std::lock_guard lock(g_fault_mutex);
  g_fault = fault;
}

std::optional<ThetaFault> theta_fault() {
  std::lock_guard lock(g_fault_mutex);
  return g_fault;
}

}  // namespace testing

}  // namespace chebwaring
