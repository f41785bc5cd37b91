#include "report/runners.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "autoconv/profile.hpp"
#include "autoconv/search.hpp"
#include "autoconv/sidon.hpp"
#include "cube/cube_norms.hpp"
#include "cube/hermite.hpp"
#include "cube/walsh.hpp"
#include "gauss/perimeter.hpp"
#include "slice/search.hpp"
#include "slice/slice.hpp"
#include "slice/spectral.hpp"

namespace extremal::report {

namespace {

using certnum::parse_rational;
using certnum::Rational;

std::vector<Rational> parse_csv_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(parse_rational(token));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + csv);
  return out;
}

std::vector<long long> parse_csv_ints(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(std::stoll(token));
  }
  if (out.empty()) throw std::invalid_argument("empty list: " + csv);
  return out;
}

class Stopwatch {
public:
  explicit Stopwatch(Certificate& cert) : cert_(cert) {}
  ~Stopwatch() {
    auto end = std::chrono::steady_clock::now();
    cert_.set_wall_time_ms(
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start_).count());
  }

private:
  Certificate& cert_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

Certificate run_gauss_certify(const std::string& a, const std::string& b,
                              const std::string& W, const std::string& h,
                              const std::string& target, long long n) {
  Certificate cert("thm1-gaussian-perimeter");
  Stopwatch watch(cert);
  gauss::NazarovParams params;
  params.n = n;
  params.a = parse_rational(a);
  params.b = parse_rational(b);
  params.W = parse_rational(W);
  params.h = parse_rational(h);
  Rational target_r = parse_rational(target);

  cert.input_rational("a", params.a);
  cert.input_rational("b", params.b);
  cert.input_rational("W", params.W);
  cert.input_rational("h", params.h);
  cert.input_rational("target", target_r);
  cert.input_int("n", params.n);

  auto result = gauss::certify_lower_bound(params, target_r);
  cert.output_interval("T", result.quadrature.trapezoid_sum);
  cert.output_float("T_lo", result.quadrature.trapezoid_sum.lo());
  cert.output_float("J_lo", result.quadrature.integral_lower);
  cert.output_interval("M", result.quadrature.second_derivative_bound);
  cert.output_float("M_hi", result.quadrature.second_derivative_bound.hi());
  cert.output_interval("prefactor", result.prefactor);
  cert.output_float("prefactor_lo", result.prefactor.lo());
  cert.output_interval("inv_sqrt_pi", result.inv_sqrt_pi);
  cert.output_float("constant_lower", result.constant_lower);
  cert.output_int("nodes", result.quadrature.node_count);
  try {
    cert.output_big("N_half_spaces", gauss::half_space_count(params));
    cert.output_interval("rho", params.rho());
  } catch (const certnum::EnclosureError&) {
    cert.output_text("N_half_spaces", "unrepresentable (main term underflow)");
  }
  if (!result.failing_factor.empty())
    cert.output_text("failing_factor", result.failing_factor);
  cert.set_status(result.certified ? Status::certified : Status::failed);
  return cert;
}

Certificate run_moment_ratio(int m, int N, bool gaussian_only, bool walsh_check) {
  Certificate cert("thm2-moment-comparison");
  Stopwatch watch(cert);
  cert.input_int("m", m);
  cert.input_int("N", N);
  cert.input("gaussian_only", gaussian_only ? "true" : "false");
  cert.input("walsh_check", walsh_check ? "true" : "false");

  auto gauss_rep = cube::gaussian_ratio_root(m);
  cert.output_rational("gaussian_L2_sq", gauss_rep.gaussian_L2_sq);
  cert.output_rational("gaussian_L4_4", gauss_rep.gaussian_L4_4);
  cert.output_float("gaussian_ratio_sq", gauss_rep.ratio_sq);
  cert.output_float("gaussian_root", gauss_rep.root);

  bool ok = true;
  if (!gaussian_only) {
    auto norms = cube::cube_norms(m, N);
    cert.output_rational("cube_L1", norms.L1);
    cert.output_rational("cube_L2_sq", norms.L2_sq);
    cert.output_float("cube_ratio", cube::cube_ratio(norms));
    cert.output_float("cube_root",
                      std::pow(cube::cube_ratio(norms), 1.0 / (2.0 * m)));
  }
  if (walsh_check) {
    int deg = cube::walsh_degree(m, N);
    int odd = cube::max_odd_support(cube::walsh_spectrum(m, N));
    cert.output_int("walsh_degree", deg);
    cert.output_int("max_odd_support", odd);
    ok = deg <= 2 * m && odd == -1;
    cert.set_status(ok ? Status::certified : Status::failed);
  } else {
    cert.set_status(Status::diagnostic);
  }
  return cert;
}

Certificate run_slice_ratio(int n, const std::string& coeffs_csv) {
  Certificate cert("thm3-balanced-szarek");
  Stopwatch watch(cert);
  cert.input_int("n", n);
  cert.input("a", coeffs_csv);
  cert.input("verb", "ratio");

  slice::SliceIndex index(n);
  auto rep = slice::khintchine_ratio(index, parse_csv_rationals(coeffs_csv));
  cert.output_rational("L1", rep.L1);
  cert.output_rational("L2_sq", rep.L2_sq);
  cert.output_rational("ratio_sq", rep.L1 * rep.L1 / rep.L2_sq);
  cert.output_float("ratio", rep.ratio);
  cert.output_rational("c_n_sq", rep.c_n_sq);
  cert.output_bool("equality", rep.equality);
  cert.set_status(rep.holds ? Status::certified : Status::failed);
  return cert;
}

Certificate run_slice_spectrum(int n) {
  Certificate cert("thm3-balanced-szarek");
  Stopwatch watch(cert);
  cert.input_int("n", n);
  cert.input("verb", "spectrum");

  auto rep = slice::laplacian_spectrum(n);
  bool ok = rep.max_deviation <= 1e-9;
  std::size_t total = 0;
  for (const auto& level : rep.levels) {
    cert.output_rational("eigenvalue_d" + std::to_string(level.d), level.eigenvalue);
    cert.output_int("multiplicity_d" + std::to_string(level.d), level.multiplicity);
    ok = ok && level.multiplicity ==
                   slice::level_multiplicity(n, level.d).convert_to<int>();
    total += static_cast<std::size_t>(level.multiplicity);
  }
  ok = ok && total == rep.dimension;
  cert.output_float("max_deviation", rep.max_deviation);
  cert.output_int("dimension", static_cast<long long>(rep.dimension));
  cert.set_status(ok ? Status::certified : Status::failed);
  return cert;
}

Certificate run_slice_poincare(int n, const std::string& coeffs_csv) {
  Certificate cert("thm3-balanced-szarek");
  Stopwatch watch(cert);
  cert.input_int("n", n);
  cert.input("a", coeffs_csv);
  cert.input("verb", "poincare");

  slice::SliceIndex index(n);
  auto a = parse_csv_rationals(coeffs_csv);
  auto triple = slice::poincare_check(index, a);
  cert.output_rational("lhs_var_term", triple.lhs);
  cert.output_rational("dirichlet_form", triple.mid);
  cert.output_rational("rhs_l2_term", triple.rhs);
  auto slack = slice::pointwise_Lf_check(index, a);
  cert.output_rational("pointwise_min_slack", slack);
  cert.set_status(triple.chain_holds && slack >= 0 ? Status::certified
                                                   : Status::failed);
  return cert;
}

Certificate run_slice_search(int n, int restarts, std::uint64_t seed) {
  Certificate cert("thm3-balanced-szarek");
  Stopwatch watch(cert);
  cert.input_int("n", n);
  cert.input_int("restarts", restarts);
  cert.input("verb", "search");
  cert.set_seed(seed);

  slice::SliceIndex index(n);
  auto res = slice::optimality_search(index, restarts, seed);
  cert.output_float("best_ratio", res.best_ratio);
  cert.output_float("c_n", res.c_n);
  cert.output_int("evaluations", res.evaluations);
  cert.output_bool("matches_extremizer", res.matches_extremizer);
  std::string argmin;
  for (std::size_t i = 0; i < res.best_a.size(); ++i) {
    if (i) argmin += ",";
    argmin += format_double(res.best_a[i]);
  }
  cert.output_text("argmin", argmin);
  cert.set_status(res.best_ratio >= res.c_n - 1e-9 ? Status::certified
                                                   : Status::failed);
  return cert;
}

namespace {

autoconv::StepProfile profile_from_args(const std::string& values_csv, int cells) {
  if (!values_csv.empty())
    return autoconv::StepProfile::from_values(parse_csv_rationals(values_csv));
  return autoconv::StepProfile::constant(cells);
}

}  // namespace

Certificate run_autoconv_sup(const std::string& values_csv, int cells) {
  Certificate cert("thm4-autoconvolution");
  Stopwatch watch(cert);
  cert.input("values", values_csv.empty() ? "constant" : values_csv);
  cert.input_int("cells", values_csv.empty() ? cells : -1);
  cert.input("verb", "sup");

  auto rep = autoconv::autoconv_sup(profile_from_args(values_csv, cells));
  cert.output_rational("sup_conv", rep.sup_conv);
  cert.output_rational("mass_sq", rep.mass_sq);
  cert.output_rational("ratio", rep.ratio);
  cert.output_int("argmax_knot", rep.argmax_knot);
  cert.set_status(Status::diagnostic);
  return cert;
}

Certificate run_autoconv_search(int cells, int m, unsigned long long budget) {
  Certificate cert("thm4-autoconvolution");
  Stopwatch watch(cert);
  cert.input_int("cells", cells);
  cert.input_int("m", m);
  cert.input_int("budget", static_cast<long long>(budget));
  cert.input("verb", "search");

  auto res = autoconv::quantized_min(cells, m, budget);
  cert.output_rational("b_value", res.b_value);
  cert.output_rational("chain_bound", res.chain_bound_value);
  cert.output_int("nodes", static_cast<long long>(res.nodes));
  cert.output_bool("complete", res.complete);
  std::string argmin;
  for (std::size_t i = 0; i < res.argmin.values.size(); ++i) {
    if (i) argmin += ",";
    argmin += certnum::rational_string(res.argmin.values[i]);
  }
  cert.output_text("argmin", argmin);
  cert.set_status(res.complete ? Status::certified : Status::incomplete);
  return cert;
}

Certificate run_autoconv_young(const std::string& values_csv, int m) {
  Certificate cert("thm4-autoconvolution");
  Stopwatch watch(cert);
  cert.input("values", values_csv.empty() ? "constant 1/m" : values_csv);
  cert.input_int("m", m);
  cert.input("verb", "young-check");

  autoconv::StepProfile eps =
      values_csv.empty()
          ? autoconv::StepProfile::constant(8, Rational(1, std::max(1, m)))
          : autoconv::StepProfile::from_values(parse_csv_rationals(values_csv));
  auto chk = autoconv::refined_young_check(eps);
  cert.output_rational("conv_sup", chk.lhs);
  cert.output_rational("linf_times_l1", chk.product);
  cert.output_rational("half_linf_sq", chk.rhs_new);
  cert.output_rational("linf_sq", chk.rhs_old);
  cert.output_bool("l1_le_half_linf", chk.l1_half_linf);
  cert.set_status(chk.chain_holds && chk.l1_half_linf ? Status::certified
                                                      : Status::failed);
  return cert;
}

Certificate run_autoconv_chain(const std::string& b, int m) {
  Certificate cert("thm4-autoconvolution");
  Stopwatch watch(cert);
  Rational br = parse_rational(b);
  cert.input_rational("b", br);
  cert.input_int("m", m);
  cert.input("verb", "chain");

  cert.output_rational("chain_bound", autoconv::chain_bound(br, m));
  cert.output_float("sigma_from_chain",
                    autoconv::sigma_from_c(autoconv::chain_bound(br, m)));
  cert.output_text("note", "b is an external input, not certified here");
  cert.set_status(Status::diagnostic);
  return cert;
}

Certificate run_sidon_check(const std::string& set_csv, int g) {
  Certificate cert("gsidon-sets");
  Stopwatch watch(cert);
  cert.input("set", set_csv);
  cert.input_int("g", g);
  cert.input("verb", "check");

  auto chk = autoconv::sidon_check(parse_csv_ints(set_csv), g);
  cert.output_bool("is_g_sidon", chk.is_g_sidon);
  cert.output_int("max_unordered_representations", chk.max_unordered);
  cert.output_int("max_ordered_representations", chk.max_ordered);
  cert.output_int("worst_sum", chk.worst_sum);
  cert.output_text("counting_convention",
                   "unordered pairs {a,b}, a <= b, repetition allowed");
  cert.set_status(chk.is_g_sidon ? Status::certified : Status::failed);
  return cert;
}

Certificate run_sidon_beta(int n, int g) {
  Certificate cert("gsidon-sets");
  Stopwatch watch(cert);
  cert.input_int("n", n);
  cert.input_int("g", g);
  cert.input("verb", "beta");

  auto res = autoconv::beta_g(n, g);
  cert.output_int("beta", res.size);
  std::string witness;
  for (std::size_t i = 0; i < res.witness.size(); ++i) {
    if (i) witness += ",";
    witness += std::to_string(res.witness[i]);
  }
  cert.output_text("witness", witness);
  cert.output_text("counting_convention",
                   "unordered pairs {a,b}, a <= b, repetition allowed");
  cert.set_status(Status::certified);
  return cert;
}

Certificate run_manifest() {
  Certificate cert("manifest");
  cert.output_text("claim_map", manifest_text());
  cert.set_status(Status::diagnostic);
  return cert;
}

}  // namespace extremal::report
