#pragma once

#include <cstdint>
#include <string>

#include "report/certificate.hpp"

namespace extremal::report {

// One runner per CLI verb. Each builds a Certificate; invalid arguments
// throw (mapped to exit code 1 by the callers).

Certificate run_gauss_certify(const std::string& a, const std::string& b,
                              const std::string& W, const std::string& h,
                              const std::string& target, long long n);

Certificate run_moment_ratio(int m, int N, bool gaussian_only, bool walsh_check);

Certificate run_slice_ratio(int n, const std::string& coeffs_csv);
Certificate run_slice_spectrum(int n);
Certificate run_slice_poincare(int n, const std::string& coeffs_csv);
Certificate run_slice_search(int n, int restarts, std::uint64_t seed);

Certificate run_autoconv_sup(const std::string& values_csv, int cells);
Certificate run_autoconv_search(int cells, int m, unsigned long long budget);
Certificate run_autoconv_young(const std::string& values_csv, int m);
Certificate run_autoconv_chain(const std::string& b, int m);

Certificate run_sidon_check(const std::string& set_csv, int g);
Certificate run_sidon_beta(int n, int g);

Certificate run_manifest();

}  // namespace extremal::report
