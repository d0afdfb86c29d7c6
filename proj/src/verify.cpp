#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>
#include <chebwaring/multipoly.hpp>
#include <chebwaring/sequences.hpp>
#include <chebwaring/symfun.hpp>
#include <chebwaring/theta.hpp>
#include <chebwaring/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <thread>

namespace chebwaring {

namespace {

VerificationReport make_report(Identity id, Params params, std::string lhs, std::string rhs) {
  VerificationReport r{id, std::move(params), Status::fail, std::move(lhs), std::move(rhs), 0};
  r.status = r.lhs == r.rhs ? Status::pass : Status::fail;
  return r;
}

VerificationReport compare(Identity id, Params params, const MultiPoly& lhs, const MultiPoly& rhs) {
  return make_report(id, std::move(params), serialize(lhs), serialize(rhs));
}

VerificationReport compare(Identity id, Params params, const BigRational& lhs, const BigRational& rhs) {
  return make_report(id, std::move(params), to_string(lhs), to_string(rhs));
}

// The three coefficient comparisons for one k.
std::vector<VerificationReport> corollary_row(int k, bool want1, bool want2) {
  std::vector<VerificationReport> out;
  for (int r = 0; r <= k; ++r) {
    if (want1) {
      out.push_back(compare(Identity::corollary1, {{"k", k}, {"r", r}, {"m", 1}}, theta_general(k, r, 1),
                            theta_m1(k, r)));
      out.push_back(compare(Identity::corollary1, {{"k", k}, {"r", r}, {"m", 2}}, theta_general(k, r, 2),
                            theta_m2(k, r)));
    }
    if (want2)
      out.push_back(compare(Identity::corollary2_vs_m2, {{"k", k}, {"r", r}}, theta_m2(k, r), theta_gp(k, r)));
  }
  return out;
}

// Rational in [-range, range] / [1, den_max], drawn with a fixed mapping from
// the 64-bit engine so corpora are identical across standard libraries.
BigRational draw_rational(std::mt19937_64& rng, long range, long den_max) {
  const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
  const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(den_max)) + 1;
  return make_rational(num, den);
}

bool chu_pole(std::uint32_t n, const BigRational& c) { return pochhammer(c, n) == 0; }

std::vector<BigRational> pochhammer_corpus() {
  return {make_rational(1, 2), make_rational(-1, 2), make_rational(1), make_rational(-1), make_rational(3, 2),
          make_rational(-7, 3)};
}

}  // namespace

const char* to_string(Identity id) noexcept {
  switch (id) {
    case Identity::theorem1: return "theorem1";
    case Identity::fundamental: return "fundamental";
    case Identity::corollary1: return "corollary1";
    case Identity::corollary2_vs_m2: return "corollary2_vs_m2";
    case Identity::lemma1: return "lemma1";
    case Identity::waring_vs_newton: return "waring_vs_newton";
    case Identity::chu_vandermonde: return "chu_vandermonde";
    case Identity::pochhammer_transforms: return "pochhammer_transforms";
  }
  return "?";
}

std::vector<Identity> all_identities() {
  return {Identity::theorem1,         Identity::fundamental,     Identity::corollary1,
          Identity::corollary2_vs_m2, Identity::lemma1,          Identity::waring_vs_newton,
          Identity::chu_vandermonde,  Identity::pochhammer_transforms};
}

Identity parse_identity(const std::string& text) {
  for (auto id : all_identities())
    if (text == to_string(id)) return id;
  fail(ErrorCode::invalid_argument, "unknown identity '" + text + "'");
}

const char* to_string(Status s) noexcept { return s == Status::pass ? "pass" : "fail"; }

VerificationReport verify_theorem1(int k, int m, int n) {
  require(k >= 1 && m >= 0 && n >= 0, "theorem1 requires k >= 1, m >= 0, n >= 0");
  const MultiPoly w_n = seq_W(n);
  const MultiPoly w_nm = seq_W(n + m);
  const auto two_k = static_cast<std::uint32_t>(2 * k);
  const MultiPoly lhs = pow(w_n, two_k) + pow(w_nm, two_k);

  const MultiPoly om = omega();
  const MultiPoly product = w_n * w_nm;
  MultiPoly rhs;
  MultiPoly product_power(1);  // (W_n W_{n+m})^r
  for (int r = 0; r <= k; ++r) {
    rhs += theta_general(k, r, m) * pow(om, static_cast<std::uint32_t>(k - r)) * product_power;
    product_power = product_power * product;
  }
  return compare(Identity::theorem1, {{"k", k}, {"m", m}, {"n", n}}, lhs, rhs);
}

VerificationReport verify_fundamental(int m, int n) {
  require(m >= 0 && n >= 0, "fundamental identity requires m, n >= 0");
  const MultiPoly w_n = seq_W(n);
  const MultiPoly w_nm = seq_W(n + m);
  const MultiPoly u_m = seq_U(m);
  const MultiPoly lhs = w_n * w_n + w_nm * w_nm;
  const MultiPoly rhs = seq_V(m) * w_n * w_nm + u_m * u_m * omega();
  return compare(Identity::fundamental, {{"m", m}, {"n", n}}, lhs, rhs);
}

std::vector<VerificationReport> verify_corollaries(int k_max) {
  require(k_max >= 1, "corollaries require k_max >= 1");
  std::vector<VerificationReport> out;
  for (int k = 1; k <= k_max; ++k) {
    auto row = corollary_row(k, true, true);
    out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  }
  return out;
}

std::vector<VerificationReport> verify_lemma(int k_max, std::optional<int> j_max) {
  require(k_max >= 1, "lemma requires k_max >= 1");
  std::vector<VerificationReport> out;
  for (int k = 1; k <= k_max; ++k) {
    int j_top = 2 * (k - 1);
    if (j_max) j_top = std::min(j_top, *j_max);
    for (int j = 0; j <= j_top; ++j) {
      const auto uk = static_cast<std::uint32_t>(k);
      const auto uj = static_cast<std::uint32_t>(j);
      out.push_back(compare(Identity::lemma1, {{"k", k}, {"j", j}}, lemma_lhs(uk, uj), lemma_rhs(uk, uj)));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_waring(int k_max) {
  require(k_max >= 1, "waring requires k_max >= 1");
  std::vector<VerificationReport> out;
  const MultiPoly x1 = MultiPoly::variable("x1");
  const MultiPoly x2 = MultiPoly::variable("x2");
  for (int k = 1; k <= k_max; ++k) {
    const auto uk = static_cast<std::uint32_t>(k);
    const SymExpansion waring = power_sum_waring(uk);
    out.push_back(compare(Identity::waring_vs_newton, {{"k", k}, {"two_letter", 0}}, waring.expr,
                          power_sum_newton(uk, uk).expr));
    out.push_back(compare(Identity::waring_vs_newton, {{"k", k}, {"two_letter", 1}},
                          specialize_two_letters(waring, x1, x2), pow(x1, uk) + pow(x2, uk)));
  }
  return out;
}

std::vector<VerificationReport> verify_chu_vandermonde(std::uint64_t seed, int samples, int n_max) {
  require(samples >= 0 && n_max >= 0, "chu_vandermonde requires samples >= 0 and n_max >= 0");
  std::mt19937_64 rng(seed);
  std::vector<VerificationReport> out;
  for (int s = 0; s < samples; ++s) {
    const auto n = static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(n_max + 1));
    const BigRational a = draw_rational(rng, 20, 9);
    BigRational c = draw_rational(rng, 20, 9);
    while (chu_pole(n, c)) c = draw_rational(rng, 20, 9);
    Params params{{"sample", s},
                  {"n", n},
                  {"a_num", a.get_num().get_si()},
                  {"a_den", a.get_den().get_si()},
                  {"c_num", c.get_num().get_si()},
                  {"c_den", c.get_den().get_si()}};
    out.push_back(compare(Identity::chu_vandermonde, std::move(params), hyp2f1_terminating(n, a, c),
                          chu_vandermonde_rhs(n, a, c)));
  }
  return out;
}

std::vector<VerificationReport> verify_pochhammer_transforms(int n_max) {
  require(n_max >= 0, "pochhammer transforms require n_max >= 0");
  const auto corpus = pochhammer_corpus();
  std::vector<VerificationReport> out;
  for (std::size_t ai = 0; ai < corpus.size(); ++ai) {
    const BigRational& a = corpus[ai];
    const auto index = static_cast<std::int64_t>(ai);
    for (int n = 0; n <= n_max; ++n) {
      const auto un = static_cast<std::uint32_t>(n);
      out.push_back(compare(Identity::pochhammer_transforms, {{"a_index", index}, {"transform", 0}, {"N", n}, {"n", n}},
                            pochhammer(a, 2 * un), pochhammer_split_even(a, un)));
      out.push_back(compare(Identity::pochhammer_transforms, {{"a_index", index}, {"transform", 1}, {"N", n}, {"n", n}},
                            pochhammer(a, 2 * un + 1), pochhammer_split_odd(a, un)));
    }
    for (int big_n = 0; big_n <= n_max; ++big_n) {
      for (int n = 0; n <= big_n; ++n) {
        const auto uN = static_cast<std::uint32_t>(big_n);
        const auto un = static_cast<std::uint32_t>(n);
        if (pochhammer(-a - big_n + 1, un) == 0) continue;  // excluded by the precondition
        out.push_back(compare(Identity::pochhammer_transforms,
                              {{"a_index", index}, {"transform", 2}, {"N", big_n}, {"n", n}},
                              pochhammer(a, uN - un), pochhammer_reflect(a, uN, un)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void validate(const SuiteConfig& cfg) {
  require(cfg.jobs >= 1, "jobs must be at least 1");
  require(!cfg.identities.empty(), "no identities selected");
  for (const auto& [name, bound] : {std::pair{"k_max", cfg.k_max}, std::pair{"m_max", cfg.m_max},
                                    std::pair{"n_max", cfg.n_max}, std::pair{"j_max", cfg.j_max}})
    require(!bound || *bound >= 0, std::string(name) + " must be nonnegative");
  require(!cfg.k_max || *cfg.k_max >= 1, "k_max must be at least 1");
  require(cfg.chu_samples >= 0, "sample count must be nonnegative");
}

namespace {

bool selected(const SuiteConfig& cfg, Identity id) {
  return std::find(cfg.identities.begin(), cfg.identities.end(), id) != cfg.identities.end();
}

using Batch = std::function<std::vector<VerificationReport>()>;

// Expands the configuration into independent units of work: one per report
// for the polynomial grids, one per k for the coefficient comparisons, and
// one each for the cheap rational grids.
std::vector<Batch> plan(const SuiteConfig& cfg) {
  std::vector<Batch> batches;
  auto single = [&](std::function<VerificationReport()> check) {
    batches.push_back([check = std::move(check)] { return std::vector<VerificationReport>{check()}; });
  };

  if (selected(cfg, Identity::theorem1)) {
    const int k_max = cfg.k_max.value_or(6);
    const int m_max = cfg.m_max.value_or(5);
    const int n_max = cfg.n_max.value_or(5);
    for (int k = 1; k <= k_max; ++k)
      for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) single([=] { return verify_theorem1(k, m, n); });
  }
  if (selected(cfg, Identity::fundamental)) {
    const int m_max = cfg.m_max.value_or(12);
    const int n_max = cfg.n_max.value_or(12);
    for (int m = 0; m <= m_max; ++m)
      for (int n = 0; n <= n_max; ++n) single([=] { return verify_fundamental(m, n); });
  }
  const bool want1 = selected(cfg, Identity::corollary1);
  const bool want2 = selected(cfg, Identity::corollary2_vs_m2);
  if (want1 || want2) {
    const int k1 = want1 ? cfg.k_max.value_or(12) : 0;
    const int k2 = want2 ? cfg.k_max.value_or(25) : 0;
    for (int k = 1; k <= std::max(k1, k2); ++k)
      batches.push_back([=] { return corollary_row(k, k <= k1, k <= k2); });
  }
  if (selected(cfg, Identity::lemma1)) {
    const int k_max = cfg.k_max.value_or(40);
    const auto j_max = cfg.j_max;
    batches.push_back([=] { return verify_lemma(k_max, j_max); });
  }
  if (selected(cfg, Identity::waring_vs_newton)) {
    const int k_max = cfg.k_max.value_or(20);
    batches.push_back([=] { return verify_waring(k_max); });
  }
  if (selected(cfg, Identity::chu_vandermonde)) {
    const auto seed = cfg.rng_seed;
    const int samples = cfg.chu_samples;
    batches.push_back([=] { return verify_chu_vandermonde(seed, samples); });
  }
  if (selected(cfg, Identity::pochhammer_transforms)) {
    batches.push_back([] { return verify_pochhammer_transforms(); });
  }
  return batches;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const std::vector<Batch> batches = plan(cfg);

  std::vector<std::vector<VerificationReport>> results(batches.size());
  std::vector<std::exception_ptr> errors(batches.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batches.size(); i = next++) {
      try {
        const auto start = std::chrono::steady_clock::now();
        results[i] = batches[i]();
        if (cfg.record_timings) {
          const auto micros = static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
          const auto share = results[i].empty() ? 0 : micros / results[i].size();
          for (auto& r : results[i]) r.elapsed_micros = share;
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(batches.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SuiteReport out;
  for (auto& batch : results)
    for (auto& r : batch) out.reports.push_back(std::move(r));
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const auto& a, const auto& b) {
    if (a.identity != b.identity) return a.identity < b.identity;
    return a.params < b.params;
  });
  for (const auto& r : out.reports) {
    ++out.summary.total;
    ++(r.status == Status::pass ? out.summary.pass : out.summary.fail);
  }
  return out;
}

std::string to_ndjson(const SuiteReport& report) {
  using nlohmann::ordered_json;
  std::string out;
  for (const auto& r : report.reports) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    ordered_json line;
    line["identity"] = to_string(r.identity);
    line["params"] = std::move(params);
    line["status"] = to_string(r.status);
    line["lhs"] = r.lhs;
    line["rhs"] = r.rhs;
    line["elapsed_micros"] = r.elapsed_micros;
    out += line.dump();
    out += '\n';
  }
  ordered_json summary;
  summary["total"] = report.summary.total;
  summary["pass"] = report.summary.pass;
  summary["fail"] = report.summary.fail;
  out += summary.dump();
  out += '\n';
  return out;
}

std::string to_text(const SuiteReport& report) {
  std::string out;
  for (const auto& r : report.reports) {
    out += r.status == Status::pass ? "PASS " : "FAIL ";
    out += to_string(r.identity);
    for (const auto& [name, value] : r.params) out += " " + name + "=" + std::to_string(value);
    if (r.elapsed_micros > 0) out += " (" + std::to_string(r.elapsed_micros) + " us)";
    out += '\n';
  }
  out += "total=" + std::to_string(report.summary.total) + " pass=" + std::to_string(report.summary.pass) +
         " fail=" + std::to_string(report.summary.fail) + '\n';
  return out;
}

std::string render(const SuiteReport& report, OutputFormat format) {
  return format == OutputFormat::json ? to_ndjson(report) : to_text(report);
}

int exit_status(const Summary& summary) noexcept { return summary.fail == 0 ? 0 : 1; }

}  // namespace chebwaring
