#pragma once

// Identity verification: both sides of each identity are expanded to
// canonical form and compared as strings. A report passes iff the two
// canonical serializations are identical.

#include <chebwaring/numeric.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chebwaring {

enum class Identity {
  theorem1,
  fundamental,
  corollary1,
  corollary2_vs_m2,
  lemma1,
  waring_vs_newton,
  chu_vandermonde,
  pochhammer_transforms,
};

const char* to_string(Identity id) noexcept;
Identity parse_identity(const std::string& text);
std::vector<Identity> all_identities();

enum class Status { pass, fail };

const char* to_string(Status s) noexcept;

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct VerificationReport {
  Identity identity;
  Params params;  // in declaration order, e.g. k, m, n
  Status status;
  std::string lhs;
  std::string rhs;
  std::uint64_t elapsed_micros = 0;
};

VerificationReport verify_theorem1(int k, int m, int n);
VerificationReport verify_fundamental(int m, int n);
std::vector<VerificationReport> verify_corollaries(int k_max);
std::vector<VerificationReport> verify_lemma(int k_max, std::optional<int> j_max = std::nullopt);
std::vector<VerificationReport> verify_waring(int k_max);
std::vector<VerificationReport> verify_chu_vandermonde(std::uint64_t seed, int samples, int n_max = 12);
std::vector<VerificationReport> verify_pochhammer_transforms(int n_max = 12);

enum class OutputFormat { json, text };

/// Grid bounds left unset fall back to per-identity defaults:
///   theorem1     k <= 6, m <= 5, n <= 5
///   fundamental  m <= 12, n <= 12
///   corollary1   k <= 12
///   corollary2   k <= 25
///   lemma1       k <= 40, j <= 2(k-1)
///   waring       k <= 20
///   chu          200 samples with n <= 12
struct SuiteConfig {
  std::optional<int> k_max;
  std::optional<int> m_max;
  std::optional<int> n_max;
  std::optional<int> j_max;
  std::vector<Identity> identities;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::json;
  std::uint64_t rng_seed = 0x5eed;
  int chu_samples = 200;
  /// Reports carry elapsed_micros = 0 unless timings are requested, which
  /// keeps the serialized output independent of scheduling.
  bool record_timings = false;
};

struct Summary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
};

struct SuiteReport {
  std::vector<VerificationReport> reports;
  Summary summary;
};

/// Throws Error(invalid_argument) on an invalid configuration.
void validate(const SuiteConfig& cfg);

/// Runs every selected grid with up to cfg.jobs checks in flight. Reports are
/// sorted by identity, then by params, regardless of scheduling.
SuiteReport run_suite(const SuiteConfig& cfg);

/// One JSON object per report followed by the summary object, each on its
/// own line.
std::string to_ndjson(const SuiteReport& report);
std::string to_text(const SuiteReport& report);
std::string render(const SuiteReport& report, OutputFormat format);

/// 0 when everything passed, 1 otherwise.
int exit_status(const Summary& summary) noexcept;

}  // namespace chebwaring
