#include <chebwaring/chebwaring.h>

#include <chebwaring/error.hpp>
#include <chebwaring/hypergeom.hpp>
#include <chebwaring/multipoly.hpp>
#include <chebwaring/sequences.hpp>
#include <chebwaring/symfun.hpp>
#include <chebwaring/theta.hpp>
#include <chebwaring/verify.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct cw_poly {
  chebwaring::MultiPoly value;
};

struct cw_suite_config {
  chebwaring::SuiteConfig value;
};

struct cw_suite_result {
  chebwaring::SuiteReport value;
};

namespace {

using namespace chebwaring;

thread_local std::string g_last_error;

int set_error(int code, const char* what) {
  g_last_error = what;
  return code;
}

template <class F>
int guarded(F&& body) {
  try {
    body();
    return CW_OK;
  } catch (const Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CW_ERR_NO_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CW_ERR_INTERNAL, "unknown exception");
  }
}

void check_out(const void* out) { require(out != nullptr, "null output pointer"); }

void check_in(const void* in) { require(in != nullptr, "null input"); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(MultiPoly value, cw_poly** out) { *out = new cw_poly{std::move(value)}; }

SeqKind seq_kind(int kind) {
  switch (kind) {
    case CW_SEQ_U: return SeqKind::U;
    case CW_SEQ_V: return SeqKind::V;
    case CW_SEQ_W: return SeqKind::W;
  }
  fail(ErrorCode::invalid_argument, "unknown sequence kind " + std::to_string(kind));
}

ThetaSource theta_source(int source) {
  switch (source) {
    case CW_THETA_GENERAL: return ThetaSource::general;
    case CW_THETA_M1: return ThetaSource::m1;
    case CW_THETA_M2: return ThetaSource::m2;
    case CW_THETA_GP: return ThetaSource::gp;
  }
  fail(ErrorCode::invalid_argument, "unknown theta source " + std::to_string(source));
}

template <class Op>
int binary(const cw_poly* f, const cw_poly* g, cw_poly** out, Op op) {
  return guarded([&] {
    check_in(f);
    check_in(g);
    check_out(out);
    emit(op(f->value, g->value), out);
  });
}

}  // namespace

extern "C" {

const char* cw_version(void) { return "1.0.0"; }

const char* cw_status_string(int status) {
  switch (status) {
    case CW_OK: return "ok";
    case CW_ERR_NO_MEMORY: return "out of memory";
    default:
      if (status >= CW_ERR_INVALID_ARGUMENT && status <= CW_ERR_INTERNAL)
        return chebwaring::to_string(static_cast<ErrorCode>(status));
      return "unknown status";
  }
}

const char* cw_last_error(void) { return g_last_error.c_str(); }

void cw_string_free(char* s) { std::free(s); }

int cw_poly_parse(const char* text, cw_poly** out) {
  return guarded([&] {
    check_in(text);
    check_out(out);
    emit(parse_poly(text), out);
  });
}

int cw_poly_constant(long value, cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(MultiPoly(value), out);
  });
}

int cw_poly_variable(const char* name, cw_poly** out) {
  return guarded([&] {
    check_in(name);
    check_out(out);
    emit(MultiPoly::variable(name), out);
  });
}

void cw_poly_free(cw_poly* f) { delete f; }

int cw_poly_add(const cw_poly* f, const cw_poly* g, cw_poly** out) {
  return binary(f, g, out, [](const MultiPoly& a, const MultiPoly& b) { return a + b; });
}

int cw_poly_sub(const cw_poly* f, const cw_poly* g, cw_poly** out) {
  return binary(f, g, out, [](const MultiPoly& a, const MultiPoly& b) { return a - b; });
}

int cw_poly_mul(const cw_poly* f, const cw_poly* g, cw_poly** out) {
  return binary(f, g, out, [](const MultiPoly& a, const MultiPoly& b) { return a * b; });
}

int cw_poly_pow(const cw_poly* f, uint32_t e, cw_poly** out) {
  return guarded([&] {
    check_in(f);
    check_out(out);
    emit(pow(f->value, e), out);
  });
}

int cw_poly_subst(const cw_poly* f, size_t count, const char* const* names, const cw_poly* const* values,
                  cw_poly** out) {
  return guarded([&] {
    check_in(f);
    check_out(out);
    require(count == 0 || (names != nullptr && values != nullptr), "null bindings");
    Bindings bindings;
    for (size_t i = 0; i < count; ++i) {
      check_in(names[i]);
      check_in(values[i]);
      bindings.emplace_back(Symbol(names[i]), values[i]->value);
    }
    emit(substitute(f->value, bindings), out);
  });
}

int cw_poly_equal(const cw_poly* f, const cw_poly* g, int* out) {
  return guarded([&] {
    check_in(f);
    check_in(g);
    check_out(out);
    *out = f->value == g->value ? 1 : 0;
  });
}

int cw_poly_serialize(const cw_poly* f, char** out) {
  return guarded([&] {
    check_in(f);
    check_out(out);
    *out = dup_string(serialize(f->value));
  });
}

int cw_seq(int kind, int n, cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(seq(seq_kind(kind), n), out);
  });
}

int cw_omega(cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(omega(), out);
  });
}

int cw_theta(int source, int k, int r, int m, cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(theta(theta_source(source), k, r, m).value, out);
  });
}

int cw_set_sequence_cache_cap(size_t cap) {
  return guarded([&] { set_sequence_cache_cap(cap); });
}

int cw_power_sum_waring(uint32_t k, cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(power_sum_waring(k).expr, out);
  });
}

int cw_power_sum_newton(uint32_t k, uint32_t num_vars, cw_poly** out) {
  return guarded([&] {
    check_out(out);
    emit(power_sum_newton(k, num_vars).expr, out);
  });
}

int cw_pochhammer(const char* a, uint32_t n, char** out) {
  return guarded([&] {
    check_in(a);
    check_out(out);
    *out = dup_string(to_string(pochhammer(parse_rational(a), n)));
  });
}

int cw_hyp2f1_terminating(uint32_t n, const char* a, const char* c, char** out) {
  return guarded([&] {
    check_in(a);
    check_in(c);
    check_out(out);
    *out = dup_string(to_string(hyp2f1_terminating(n, parse_rational(a), parse_rational(c))));
  });
}

int cw_chu_vandermonde_rhs(uint32_t n, const char* a, const char* c, char** out) {
  return guarded([&] {
    check_in(a);
    check_in(c);
    check_out(out);
    *out = dup_string(to_string(chu_vandermonde_rhs(n, parse_rational(a), parse_rational(c))));
  });
}

int cw_lemma_lhs(uint32_t k, uint32_t j, char** out) {
  return guarded([&] {
    check_out(out);
    *out = dup_string(to_string(lemma_lhs(k, j)));
  });
}

int cw_lemma_rhs(uint32_t k, uint32_t j, char** out) {
  return guarded([&] {
    check_out(out);
    *out = dup_string(to_string(lemma_rhs(k, j)));
  });
}

int cw_suite_config_new(cw_suite_config** out) {
  return guarded([&] {
    check_out(out);
    *out = new cw_suite_config{};
    (*out)->value.identities = all_identities();
  });
}

void cw_suite_config_free(cw_suite_config* cfg) { delete cfg; }

int cw_suite_config_set_identities(cw_suite_config* cfg, const char* const* names, size_t count) {
  return guarded([&] {
    check_in(cfg);
    require(count == 0 || names != nullptr, "null identity list");
    std::vector<Identity> ids;
    for (size_t i = 0; i < count; ++i) {
      check_in(names[i]);
      ids.push_back(parse_identity(names[i]));
    }
    cfg->value.identities = std::move(ids);
  });
}

int cw_suite_config_set_bound(cw_suite_config* cfg, const char* which, int value) {
  return guarded([&] {
    check_in(cfg);
    check_in(which);
    const std::string name = which;
    std::optional<int>* slot = nullptr;
    if (name == "k_max") slot = &cfg->value.k_max;
    if (name == "m_max") slot = &cfg->value.m_max;
    if (name == "n_max") slot = &cfg->value.n_max;
    if (name == "j_max") slot = &cfg->value.j_max;
    require(slot != nullptr, "unknown bound '" + name + "'");
    *slot = value < 0 ? std::nullopt : std::optional<int>(value);
  });
}

int cw_suite_config_set_jobs(cw_suite_config* cfg, unsigned jobs) {
  return guarded([&] {
    check_in(cfg);
    require(jobs >= 1, "jobs must be at least 1");
    cfg->value.jobs = jobs;
  });
}

int cw_suite_config_set_seed(cw_suite_config* cfg, uint64_t seed) {
  return guarded([&] {
    check_in(cfg);
    cfg->value.rng_seed = seed;
  });
}

int cw_suite_config_set_samples(cw_suite_config* cfg, int samples) {
  return guarded([&] {
    check_in(cfg);
    require(samples >= 0, "sample count must be nonnegative");
    cfg->value.chu_samples = samples;
  });
}

int cw_suite_config_set_timings(cw_suite_config* cfg, int enabled) {
  return guarded([&] {
    check_in(cfg);
    cfg->value.record_timings = enabled != 0;
  });
}

int cw_run_suite(const cw_suite_config* cfg, cw_suite_result** out) {
  return guarded([&] {
    check_in(cfg);
    check_out(out);
    *out = new cw_suite_result{run_suite(cfg->value)};
  });
}

void cw_suite_result_free(cw_suite_result* result) { delete result; }

int cw_suite_result_summary(const cw_suite_result* result, size_t* total, size_t* pass, size_t* fail) {
  return guarded([&] {
    check_in(result);
    const auto& s = result->value.summary;
    if (total) *total = s.total;
    if (pass) *pass = s.pass;
    if (fail) *fail = s.fail;
  });
}

size_t cw_suite_result_size(const cw_suite_result* result) {
  return result == nullptr ? 0 : result->value.reports.size();
}

int cw_suite_result_report(const cw_suite_result* result, size_t index, const char** identity, int* status,
                           const char** lhs, const char** rhs) {
  return guarded([&] {
    check_in(result);
    require(index < result->value.reports.size(), "report index out of range");
    const auto& r = result->value.reports[index];
    if (identity) *identity = to_string(r.identity);
    if (status) *status = r.status == Status::pass ? CW_REPORT_PASS : CW_REPORT_FAIL;
    if (lhs) *lhs = r.lhs.c_str();
    if (rhs) *rhs = r.rhs.c_str();
  });
}

int cw_suite_result_render(const cw_suite_result* result, int format, char** out) {
  return guarded([&] {
    check_in(result);
    check_out(out);
    require(format == CW_FORMAT_JSON || format == CW_FORMAT_TEXT, "unknown output format");
    *out = dup_string(render(result->value, format == CW_FORMAT_JSON ? OutputFormat::json : OutputFormat::text));
  });
}

int cw_suite_result_exit_status(const cw_suite_result* result) {
  return result == nullptr ? 2 : exit_status(result->value.summary);
}

int cw_testing_set_theta_fault(int enabled, int k, int r) {
  return guarded([&] {
    if (enabled) {
      chebwaring::testing::set_theta_fault(chebwaring::testing::ThetaFault{k, r});
    } else {
      chebwaring::testing::set_theta_fault(std::nullopt);
    }
  });
}

}  // extern "C"
