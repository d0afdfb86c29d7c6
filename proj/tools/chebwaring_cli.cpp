// Command-line front end over the C interface.
//
//   chebwaring verify all|theorem1|fundamental|corollary1|corollary2|lemma|waring|chu [flags]
//   chebwaring theta --k K --r R --m M [--source general|m1|m2|gp]
//   chebwaring seq --kind U|V|W --n N
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or domain error.

#include <chebwaring/chebwaring.h>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;

int report_error(int status) {
  std::cerr << "error: " << cw_status_string(status) << ": " << cw_last_error() << '\n';
  return kExitUsage;
}

struct PolyDeleter {
  void operator()(cw_poly* p) const { cw_poly_free(p); }
};
struct ConfigDeleter {
  void operator()(cw_suite_config* c) const { cw_suite_config_free(c); }
};
struct ResultDeleter {
  void operator()(cw_suite_result* r) const { cw_suite_result_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { cw_string_free(s); }
};

using PolyPtr = std::unique_ptr<cw_poly, PolyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int print_poly(int status, cw_poly* raw) {
  PolyPtr poly(raw);
  if (status != CW_OK) return report_error(status);
  char* text = nullptr;
  if (int rc = cw_poly_serialize(poly.get(), &text); rc != CW_OK) return report_error(rc);
  StringPtr owned(text);
  std::cout << owned.get() << '\n';
  return 0;
}

const std::map<std::string, std::vector<const char*>>& verify_targets() {
  static const std::map<std::string, std::vector<const char*>> targets = {
      {"all",
       {"theorem1", "fundamental", "corollary1", "corollary2_vs_m2", "lemma1", "waring_vs_newton",
        "chu_vandermonde", "pochhammer_transforms"}},
      {"theorem1", {"theorem1"}},
      {"fundamental", {"fundamental"}},
      {"corollary1", {"corollary1"}},
      {"corollary2", {"corollary2_vs_m2"}},
      {"lemma", {"lemma1"}},
      {"waring", {"waring_vs_newton"}},
      {"chu", {"chu_vandermonde", "pochhammer_transforms"}},
  };
  return targets;
}

struct VerifyOptions {
  std::string target;
  std::optional<int> k_max, m_max, n_max, j_max;
  unsigned jobs = 1;
  std::string format = "json";
  std::uint64_t seed = 0x5eed;
  int samples = 200;
  bool timings = false;
  bool inject_theta_fault = false;
};

int run_verify(const VerifyOptions& opt) {
  cw_suite_config* raw_cfg = nullptr;
  if (int rc = cw_suite_config_new(&raw_cfg); rc != CW_OK) return report_error(rc);
  std::unique_ptr<cw_suite_config, ConfigDeleter> cfg(raw_cfg);

  const auto& ids = verify_targets().at(opt.target);
  int rc = cw_suite_config_set_identities(cfg.get(), ids.data(), ids.size());
  for (const auto& [name, bound] : {std::pair{"k_max", opt.k_max}, std::pair{"m_max", opt.m_max},
                                    std::pair{"n_max", opt.n_max}, std::pair{"j_max", opt.j_max}}) {
    if (!bound) continue;
    if (*bound < 0) {
      std::cerr << "error: " << name << " must be nonnegative\n";
      return kExitUsage;
    }
    if (rc == CW_OK) rc = cw_suite_config_set_bound(cfg.get(), name, *bound);
  }
  if (rc == CW_OK) rc = cw_suite_config_set_jobs(cfg.get(), opt.jobs);
  if (rc == CW_OK) rc = cw_suite_config_set_seed(cfg.get(), opt.seed);
  if (rc == CW_OK) rc = cw_suite_config_set_samples(cfg.get(), opt.samples);
  if (rc == CW_OK) rc = cw_suite_config_set_timings(cfg.get(), opt.timings ? 1 : 0);
  if (rc == CW_OK && opt.inject_theta_fault) rc = cw_testing_set_theta_fault(1, -1, -1);
  if (rc != CW_OK) return report_error(rc);

  cw_suite_result* raw_result = nullptr;
  if (rc = cw_run_suite(cfg.get(), &raw_result); rc != CW_OK) return report_error(rc);
  std::unique_ptr<cw_suite_result, ResultDeleter> result(raw_result);

  char* text = nullptr;
  const int format = opt.format == "json" ? CW_FORMAT_JSON : CW_FORMAT_TEXT;
  if (rc = cw_suite_result_render(result.get(), format, &text); rc != CW_OK) return report_error(rc);
  StringPtr owned(text);
  std::fputs(owned.get(), stdout);
  std::fflush(stdout);
  return cw_suite_result_exit_status(result.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Waring-formula identities for Chebyshev-type sequences"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check identities over parameter grids");
  std::vector<std::string> target_names;
  for (const auto& [name, ids] : verify_targets()) target_names.push_back(name);
  verify->add_option("target", vopt.target, "Which identities to check")
      ->required()
      ->check(CLI::IsMember(target_names));
  verify->add_option("--k-max", vopt.k_max, "Upper bound on k (default depends on the identity)");
  verify->add_option("--m-max", vopt.m_max, "Upper bound on m");
  verify->add_option("--n-max", vopt.n_max, "Upper bound on n");
  verify->add_option("--j-max", vopt.j_max, "Upper bound on j for the lemma grid");
  verify->add_option("--jobs", vopt.jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  verify->add_option("--format", vopt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--seed", vopt.seed, "Seed for the random Chu-Vandermonde corpus");
  verify->add_option("--samples", vopt.samples, "Size of the Chu-Vandermonde corpus")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", vopt.timings, "Record elapsed_micros (output is then not reproducible)");
  verify->add_flag("--inject-theta-fault", vopt.inject_theta_fault, "Perturb every general theta by +1")
      ->group("");

  int k = 0, r = 0, m = 0;
  std::string source = "general";
  auto* theta = app.add_subcommand("theta", "Print theta_{k,r}(m) in canonical form");
  theta->add_option("--k", k, "k >= 1")->required();
  theta->add_option("--r", r, "0 <= r <= k")->required();
  theta->add_option("--m", m, "m >= 0 (implied by the m1, m2 and gp sources)");
  theta->add_option("--source", source, "Formula to evaluate")
      ->check(CLI::IsMember({"general", "m1", "m2", "gp"}));

  std::string kind;
  int n = 0;
  auto* seq = app.add_subcommand("seq", "Print U_n, V_n or W_n in canonical form");
  seq->add_option("--kind", kind, "U, V or W")->required()->check(CLI::IsMember({"U", "V", "W"}));
  seq->add_option("--n", n, "n >= 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) return run_verify(vopt);

  if (*theta) {
    if (source == "general" && theta->count("--m") == 0) {
      std::cerr << "error: --m is required for the general source\n";
      return kExitUsage;
    }
    const std::map<std::string, int> sources = {
        {"general", CW_THETA_GENERAL}, {"m1", CW_THETA_M1}, {"m2", CW_THETA_M2}, {"gp", CW_THETA_GP}};
    cw_poly* out = nullptr;
    int rc = cw_theta(sources.at(source), k, r, m, &out);
    return print_poly(rc, out);
  }

  const std::map<std::string, int> kinds = {{"U", CW_SEQ_U}, {"V", CW_SEQ_V}, {"W", CW_SEQ_W}};
  cw_poly* out = nullptr;
  int rc = cw_seq(kinds.at(kind), n, &out);
  return print_poly(rc, out);
}
