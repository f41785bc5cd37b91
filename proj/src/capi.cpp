#include "extremal/extremal.h"

#include <exception>
#include <string>

#include "report/certificate.hpp"
#include "report/runners.hpp"

using extremal::report::Certificate;

struct exc_report {
  std::string json;
  std::string status;
  std::string claim_id;
  int exit_code = 1;
};

namespace {

thread_local std::string g_last_error;

exc_status wrap(exc_report** out, Certificate (*make)(void*), void* ctx) {
  if (out == nullptr) {
    g_last_error = "out parameter is NULL";
    return EXC_ERROR;
  }
  *out = nullptr;
  try {
    Certificate cert = make(ctx);
    auto* report = new exc_report;
    report->json = cert.to_json();
    report->status = extremal::report::status_name(cert.status());
    report->claim_id = cert.claim_id();
    report->exit_code = cert.exit_code();
    *out = report;
    return report->exit_code == 0 ? EXC_OK : EXC_FAILED;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EXC_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return EXC_ERROR;
  }
}

template <typename Fn>
exc_status run(exc_report** out, Fn&& fn) {
  return wrap(
      out, [](void* ctx) { return (*static_cast<Fn*>(ctx))(); }, &fn);
}

std::string arg(const char* s) { return s == nullptr ? std::string() : s; }

}  // namespace

extern "C" {

exc_status exc_gauss_certify(const char* a, const char* b, const char* W,
                             const char* h, const char* target, long long n,
                             exc_report** out) {
  return run(out, [&] {
    return extremal::report::run_gauss_certify(arg(a), arg(b), arg(W), arg(h),
                                               arg(target), n);
  });
}

exc_status exc_moment_ratio(int m, int N, int gaussian_only, int walsh_check,
                            exc_report** out) {
  return run(out, [&] {
    return extremal::report::run_moment_ratio(m, N, gaussian_only != 0,
                                              walsh_check != 0);
  });
}

exc_status exc_slice_ratio(int n, const char* coeffs, exc_report** out) {
  return run(out, [&] { return extremal::report::run_slice_ratio(n, arg(coeffs)); });
}

exc_status exc_slice_spectrum(int n, exc_report** out) {
  return run(out, [&] { return extremal::report::run_slice_spectrum(n); });
}

exc_status exc_slice_poincare(int n, const char* coeffs, exc_report** out) {
  return run(out,
             [&] { return extremal::report::run_slice_poincare(n, arg(coeffs)); });
}

exc_status exc_slice_search(int n, int restarts, uint64_t seed,
                            exc_report** out) {
  return run(out,
             [&] { return extremal::report::run_slice_search(n, restarts, seed); });
}

exc_status exc_autoconv_sup(const char* values, int cells, exc_report** out) {
  return run(out,
             [&] { return extremal::report::run_autoconv_sup(arg(values), cells); });
}

exc_status exc_autoconv_search(int cells, int m, uint64_t node_budget,
                               exc_report** out) {
  return run(out, [&] {
    return extremal::report::run_autoconv_search(cells, m, node_budget);
  });
}

exc_status exc_autoconv_young(const char* values, int m, exc_report** out) {
  return run(out,
             [&] { return extremal::report::run_autoconv_young(arg(values), m); });
}

exc_status exc_autoconv_chain(const char* b, int m, exc_report** out) {
  return run(out, [&] { return extremal::report::run_autoconv_chain(arg(b), m); });
}

exc_status exc_sidon_check(const char* set, int g, exc_report** out) {
  return run(out, [&] { return extremal::report::run_sidon_check(arg(set), g); });
}

exc_status exc_sidon_beta(int n, int g, exc_report** out) {
  return run(out, [&] { return extremal::report::run_sidon_beta(n, g); });
}

exc_status exc_manifest(exc_report** out) {
  return run(out, [] { return extremal::report::run_manifest(); });
}

const char* exc_manifest_text(void) {
  static const std::string text = extremal::report::manifest_text();
  return text.c_str();
}

const char* exc_report_json(const exc_report* report) {
  return report ? report->json.c_str() : "";
}

const char* exc_report_status(const exc_report* report) {
  return report ? report->status.c_str() : "";
}

const char* exc_report_claim_id(const exc_report* report) {
  return report ? report->claim_id.c_str() : "";
}

int exc_report_exit_code(const exc_report* report) {
  return report ? report->exit_code : 1;
}

void exc_report_free(exc_report* report) { delete report; }

const char* exc_last_error(void) { return g_last_error.c_str(); }

const char* exc_version(void) { return extremal::report::kToolVersion; }

}  // extern "C"
