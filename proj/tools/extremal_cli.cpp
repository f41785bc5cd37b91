// Command-line front end. Talks to the library exclusively through the
// C API in extremal/extremal.h; flag parsing and report-file writing live
// here, certification logic lives behind the shared library.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "extremal/extremal.h"

namespace {

struct GlobalOpts {
  std::string report_path;
  int threads = 1;
  std::uint64_t seed = 12345;
};

// Emits the certificate (stdout + optional report file) and maps the
// C-API status to the process exit code: 0 certified/diagnostic, 2 failed,
// 1 runtime error.
int finish(exc_status status, exc_report* report, const GlobalOpts& opts,
           bool print_json = true) {
  if (status == EXC_ERROR || report == nullptr) {
    std::cerr << "error: " << exc_last_error() << "\n";
    return 1;
  }
  if (print_json) std::cout << exc_report_json(report);
  if (!opts.report_path.empty()) {
    std::ofstream out(opts.report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to " << opts.report_path << "\n";
      exc_report_free(report);
      return 1;
    }
    out << exc_report_json(report);
  }
  int code = exc_report_exit_code(report);
  exc_report_free(report);
  return code;
}

// --args-file <path>: newline-separated flags spliced verbatim into argv.
std::vector<std::string> load_args(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--args-file") {
      if (i + 1 >= argc) throw std::runtime_error("--args-file needs a path");
      std::ifstream in(argv[++i]);
      if (!in) throw std::runtime_error(std::string("cannot read ") + argv[i]);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) args.push_back(line);
      }
    } else {
      args.push_back(std::move(a));
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified verification suite for five extremal constants"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  // --h is a real parameter of the quadrature; keep help on --help only
  app.set_help_flag("--help", "print help");

  GlobalOpts opts;
  app.add_option("--report", opts.report_path, "write the JSON certificate here");
  app.add_option("--threads", opts.threads,
                 "reserved; runs are deterministic and single-threaded")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "seed for randomized verbs (default 12345)");

  // gauss-perimeter certify
  auto* gauss = app.add_subcommand("gauss-perimeter",
                                   "Gaussian-perimeter lower-bound certificate");
  auto* certify = gauss->add_subcommand("certify", "run the certified pipeline");
  certify->set_help_flag("--help", "print help");
  std::string g_a = "6131/5000", g_b = "2387/1000", g_W = "6", g_h = "1/2000";
  std::string g_target = "0.312584";
  long long g_n = 10000;
  certify->add_option("--a", g_a, "slope parameter (rational, default 6131/5000)");
  certify->add_option("--b", g_b, "density parameter (rational, default 2387/1000)");
  certify->add_option("--W", g_W, "integration window (rational, default 6)");
  certify->add_option("--h", g_h, "trapezoid step (rational, default 1/2000)");
  certify->add_option("--target", g_target, "decimal target (default 0.312584)");
  certify->add_option("--n", g_n, "diagnostic dimension for rho and N (default 10000)");

  // moment-ratio
  auto* moment = app.add_subcommand("moment-ratio", "Hermite and cube moment ratios");
  int m_m = 2, m_N = 1000;
  bool m_gauss_only = false, m_walsh = false;
  moment->add_option("--m", m_m, "Hermite degree (default 2)")->check(CLI::PositiveNumber);
  moment->add_option("--N", m_N, "number of cube coordinates (default 1000)");
  moment->add_flag("--gaussian-only", m_gauss_only, "skip the cube norms");
  moment->add_flag("--walsh-check", m_walsh,
                   "certify spectrum degree <= 2m (needs N <= 14)");

  // slice verbs
  auto* slice = app.add_subcommand("slice", "balanced comparison on the middle slice");
  int s_n = 4, s_restarts = 200;
  std::string s_a = "1,1,0,0";
  auto* s_ratio = slice->add_subcommand("ratio", "exact L1/L2 ratio for coefficients a");
  s_ratio->add_option("--n", s_n, "slice dimension (even, default 4)");
  s_ratio->add_option("--a", s_a, "comma-separated rational coefficients");
  auto* s_spec = slice->add_subcommand("spectrum", "transposition-Laplacian levels");
  s_spec->add_option("--n", s_n, "slice dimension (even, default 4)");
  auto* s_poin = slice->add_subcommand("poincare", "exact Poincare chain and pointwise bound");
  s_poin->add_option("--n", s_n, "slice dimension (even, default 4)");
  s_poin->add_option("--a", s_a, "comma-separated rational coefficients");
  auto* s_search = slice->add_subcommand("search", "multi-start extremizer search");
  s_search->add_option("--n", s_n, "slice dimension (even, default 4)");
  s_search->add_option("--restarts", s_restarts, "restart count (default 200)");

  // autoconv verbs
  auto* ac = app.add_subcommand("autoconv", "autoconvolution bounds for step profiles");
  std::string ac_values;
  int ac_cells = 8, ac_m = 3, ac_chain_m = 50;
  std::uint64_t ac_budget = 50000000ULL;
  std::string ac_b = "3301/2500";
  auto* ac_sup = ac->add_subcommand("sup", "exact sup of f*f / mass^2");
  ac_sup->add_option("--values", ac_values, "comma-separated cell heights");
  ac_sup->add_option("--cells", ac_cells, "cells for the constant profile (default 8)");
  auto* ac_search = ac->add_subcommand("search", "certified quantized minimum");
  ac_search->add_option("--cells", ac_cells, "cell count (default 8)");
  ac_search->add_option("--m", ac_m, "height levels 0..m (default 3)");
  ac_search->add_option("--budget", ac_budget, "node budget (default 5e7)");
  auto* ac_young = ac->add_subcommand("young-check", "refined Young chain, exact");
  ac_young->add_option("--values", ac_values, "comma-separated cell heights");
  ac_young->add_option("--m", ac_m, "normalization level (default 3)");
  auto* ac_chain = ac->add_subcommand("chain", "b - 2/m - 1/(2m^2) for external b");
  ac_chain->add_option("--b", ac_b, "external quantized-class value (rational)");
  ac_chain->add_option("--m", ac_chain_m, "quantization level (default 50)");

  // sidon verbs
  auto* sidon = app.add_subcommand("sidon", "g-Sidon set verdicts and maxima");
  std::string sd_set = "1,2,5,11";
  int sd_g = 1, sd_n = 7;
  auto* sd_check = sidon->add_subcommand("check", "is the set g-Sidon?");
  sd_check->add_option("--set", sd_set, "comma-separated positive integers");
  sd_check->add_option("--g", sd_g, "representation bound (default 1)");
  auto* sd_beta = sidon->add_subcommand("beta", "maximal g-Sidon subset of {1..n}");
  sd_beta->add_option("--n", sd_n, "ground set bound (default 7, max 30)");
  sd_beta->add_option("--g", sd_g, "representation bound (default 1)");

  auto* manifest = app.add_subcommand("manifest", "claim-to-theorem map");

  std::vector<std::string> args;
  try {
    args = load_args(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::vector<const char*> cargs;
  cargs.push_back(argc > 0 ? argv[0] : "extremal");
  for (const auto& a : args) cargs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    app.exit(e);  // prints the usage message
    return 1;
  }

  exc_report* report = nullptr;
  if (certify->parsed()) {
    exc_status st = exc_gauss_certify(g_a.c_str(), g_b.c_str(), g_W.c_str(),
                                    g_h.c_str(), g_target.c_str(), g_n, &report);
    return finish(st, report, opts);
  }
  if (moment->parsed()) {
    exc_status st = exc_moment_ratio(m_m, m_N, m_gauss_only ? 1 : 0,
                                   m_walsh ? 1 : 0, &report);
    return finish(st, report, opts);
  }
  if (s_ratio->parsed()) {
    exc_status st = exc_slice_ratio(s_n, s_a.c_str(), &report);
    return finish(st, report, opts);
  }
  if (s_spec->parsed()) {
    exc_status st = exc_slice_spectrum(s_n, &report);
    return finish(st, report, opts);
  }
  if (s_poin->parsed()) {
    exc_status st = exc_slice_poincare(s_n, s_a.c_str(), &report);
    return finish(st, report, opts);
  }
  if (s_search->parsed()) {
    exc_status st = exc_slice_search(s_n, s_restarts, opts.seed, &report);
    return finish(st, report, opts);
  }
  if (ac_sup->parsed()) {
    exc_status st = exc_autoconv_sup(ac_values.c_str(), ac_cells, &report);
    return finish(st, report, opts);
  }
  if (ac_search->parsed()) {
    exc_status st = exc_autoconv_search(ac_cells, ac_m, ac_budget, &report);
    return finish(st, report, opts);
  }
  if (ac_young->parsed()) {
    exc_status st = exc_autoconv_young(ac_values.c_str(), ac_m, &report);
    return finish(st, report, opts);
  }
  if (ac_chain->parsed()) {
    exc_status st = exc_autoconv_chain(ac_b.c_str(), ac_chain_m, &report);
    return finish(st, report, opts);
  }
  if (sd_check->parsed()) {
    exc_status st = exc_sidon_check(sd_set.c_str(), sd_g, &report);
    return finish(st, report, opts);
  }
  if (sd_beta->parsed()) {
    exc_status st = exc_sidon_beta(sd_n, sd_g, &report);
    return finish(st, report, opts);
  }
  if (manifest->parsed()) {
    std::cout << "extremal " << exc_version() << "\n" << exc_manifest_text();
    exc_status st = exc_manifest(&report);
    return finish(st, report, opts, /*print_json=*/false);
  }
  std::cerr << "error: no verb selected\n";
  return 1;
}
