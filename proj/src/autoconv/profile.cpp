#include "autoconv/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace extremal::autoconv {

StepProfile StepProfile::from_values(std::vector<Rational> v) {
  if (v.empty()) throw std::invalid_argument("StepProfile: at least one cell");
  for (const auto& x : v) {
    if (x < 0) throw std::invalid_argument("StepProfile: negative height");
  }
  StepProfile p;
  p.cells = static_cast<int>(v.size());
  p.delta = Rational(1, 2 * p.cells);
  p.values = std::move(v);
  return p;
}

StepProfile StepProfile::constant(int cells, const Rational& height) {
  if (cells < 1) throw std::invalid_argument("StepProfile: cells >= 1");
  return from_values(std::vector<Rational>(static_cast<std::size_t>(cells), height));
}

Rational StepProfile::mass() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return delta * s;
}

Rational StepProfile::sup_norm() const {
  Rational m = 0;
  for (const auto& v : values) {
    if (v > m) m = v;
  }
  return m;
}

bool StepProfile::is_zero() const {
  for (const auto& v : values) {
    if (v != 0) return false;
  }
  return true;
}

AutoconvReport autoconv_sup(const StepProfile& p) {
  if (p.is_zero()) throw std::invalid_argument("autoconv_sup: zero profile");
  const int c = p.cells;
  AutoconvReport rep;
  rep.profile = p;
  Rational best = 0;
  for (int k = 0; k <= 2 * (c - 1); ++k) {
    Rational s = 0;
    int ilo = std::max(0, k - (c - 1));
    int ihi = std::min(c - 1, k);
    for (int i = ilo; i <= ihi; ++i)
      s += p.values[static_cast<std::size_t>(i)] *
           p.values[static_cast<std::size_t>(k - i)];
    if (s > best) {
      best = s;
      rep.argmax_knot = k;
    }
  }
  rep.sup_conv = p.delta * best;
  Rational m = p.mass();
  rep.mass_sq = m * m;
  rep.ratio = rep.sup_conv / rep.mass_sq;
  return rep;
}

Rational autoconv_at(const StepProfile& p, const Rational& x) {
  // each cell pair contributes a triangle of height delta*v_i*v_j peaking at
  // -1/2 + (i+j+1)*delta with half-width delta
  Rational acc = 0;
  const int c = p.cells;
  for (int i = 0; i < c; ++i) {
    if (p.values[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < c; ++j) {
      if (p.values[static_cast<std::size_t>(j)] == 0) continue;
      Rational center = Rational(-1, 2) + Rational(i + j + 1) * p.delta;
      Rational dist = abs(x - center);
      if (dist < p.delta) {
        acc += p.values[static_cast<std::size_t>(i)] *
               p.values[static_cast<std::size_t>(j)] * (p.delta - dist);
      }
    }
  }
  return acc;
}

YoungCheck refined_young_check(const StepProfile& eps) {
  YoungCheck out;
  auto rep = autoconv_sup(eps);
  Rational linf = eps.sup_norm();
  Rational l1 = eps.mass();
  out.lhs = rep.sup_conv;
  out.product = linf * l1;
  out.rhs_new = linf * linf / 2;
  out.rhs_old = linf * linf;
  out.l1_half_linf = l1 <= linf / 2;
  out.chain_holds = out.lhs <= out.product && out.product <= out.rhs_new &&
                    out.rhs_new <= out.rhs_old;
  return out;
}

double sigma_from_c(const Rational& c) {
  if (!(c > 0)) throw std::invalid_argument("sigma_from_c: c > 0 required");
  return std::sqrt(Rational(2 / c).convert_to<double>());
}

Rational chain_bound(const Rational& b, int m) {
  if (m < 1) throw std::invalid_argument("chain_bound: m >= 1 required");
  return b - Rational(2, m) - Rational(1, 2LL * m * m);
}

}  // namespace extremal::autoconv
