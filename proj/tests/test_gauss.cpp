#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <cmath>

#include "gauss/facet.hpp"
#include "gauss/montecarlo.hpp"
#include "gauss/perimeter.hpp"
#include "oracle.hpp"

using namespace extremal::gauss;
using extremal::certnum::EnclosureError;
using extremal::certnum::Interval;
using extremal::certnum::interval_exp;
using extremal::certnum::interval_sqrt;
using extremal::certnum::parse_rational;
using extremal::certnum::Rational;
using extremal::certnum::rational_from_double;
using extremal::certnum::sqr;
using extremal::certnum::to_interval;
using extremal::testing::BF;
using extremal::testing::encloses;
using extremal::testing::SplitMix;
using extremal::testing::to_bf;

namespace {

const BF kPi = boost::math::constants::pi<BF>();

BF oracle_L(long long n, const BF& rho) {
  return 1 / sqrt(2 * kPi) / rho * exp(pow(rho, 4) / (4 * BF(n))) *
         exp(-rho * rho / 2);
}

// Double-precision Simpson oracle for p(r) on the raw integrand ratio;
// independent of the certified quadrature path.
double oracle_p(long long n, double rho, double r) {
  double S = r * r + rho * rho;
  double x0 = rho / std::sqrt(S);
  double alpha = static_cast<double>(n - 2) / 2.0;
  auto f = [&](double u) { return std::pow(std::max(0.0, 1.0 - u * u), alpha); };
  const int m = 200000;  // even
  double hstep = (1.0 - x0) / m;
  double acc = f(x0) + f(1.0);
  for (int i = 1; i < m; ++i) acc += f(x0 + i * hstep) * (i % 2 ? 4.0 : 2.0);
  double num = acc * hstep / 3.0;
  double den = std::sqrt(M_PI) *
               std::exp(std::lgamma(0.5 * n) - std::lgamma(0.5 * (n + 1)));
  return num / den;
}

}  // namespace

TEST_CASE("main_term_L: direct substitution identity at rho = 1") {
  for (long long n : {5LL, 100LL}) {
    Interval L = main_term_L(n, Interval(1.0));
    BF want = 1 / sqrt(2 * kPi) * exp(BF(1) / (4 * BF(n))) * exp(BF(-0.5));
    CHECK(encloses(L, want));
  }
}

TEST_CASE("main_term_L: 10-digit agreement with 100-digit oracle at n = 10^4") {
  NazarovParams p;  // a = 6131/5000, n = 10^4, so rho = 12.262 exactly
  Interval L = main_term_L(p.n, p.rho());
  BF want = oracle_L(p.n, BF(6131) / 5000 * 10);
  CHECK(encloses(L, want));
  CHECK(L.width() <= 1e-10 * std::abs(L.lo()));
  // frozen oracle digits
  CHECK(L.lo() > 1.283134084e-34);
  CHECK(L.hi() < 1.283134085e-34);
}

TEST_CASE("main_term_L: exact identity (1/sqrt(2pi))e^{-rho^2/2} = rho e^{-rho^4/4n} L") {
  for (long long n : {50LL, 1000LL, 10000LL}) {
    for (double aval : {0.8, 1.2262, 2.0}) {
      Interval rho = Interval(aval) * interval_sqrt(interval_sqrt(
                                          Interval(static_cast<double>(n))));
      Interval lhs = (Interval(1.0) / extremal::certnum::sqrt_2pi_enclosure()) *
                     interval_exp(-sqr(rho) / 2.0);
      Interval rhs = rho *
                     interval_exp(-extremal::certnum::pow_int(rho, 4) /
                                  Interval(4.0 * static_cast<double>(n))) *
                     main_term_L(n, rho);
      CHECK(lhs.intersects(rhs));
    }
  }
}

TEST_CASE("half_space_count: N >= 1 and underflow is reported") {
  NazarovParams p;
  p.n = 100;
  CHECK(half_space_count(p) >= 1);
  p.n = 100000000;  // rho^2/2 ~ 75187: L underflows
  CHECK_THROWS_AS(half_space_count(p), EnclosureError);
}

TEST_CASE("integrand_F frozen examples") {
  CHECK(integrand_F(Interval(0.0), Rational(1), Rational(0)).contains(1.0));

  Rational a(6131, 5000), b(2387, 1000);
  Interval f0 = integrand_F(Interval(0.0), a, b);
  CHECK(encloses(f0, exp(-to_bf(b))));

  Interval fm6 = integrand_F(Interval(-6.0), a, b);
  BF want = exp(BF(-36) - to_bf(b) * exp(to_bf(a * a) * -6));
  CHECK(encloses(fm6, want));
  CHECK(fm6.lo() > 2.3188541094e-16);
  CHECK(fm6.hi() < 2.3188541095e-16);
}

TEST_CASE("F(w) <= e^{-w^2} pointwise for b > 0") {
  Rational a(6131, 5000), b(2387, 1000);
  for (int k = 0; k <= 240; ++k) {
    double w = -6.0 + k * 0.05;
    Interval F = integrand_F(Interval(w), a, b);
    Interval env = interval_exp(-sqr(Interval(w)));
    CHECK(F.hi() <= env.hi() * (1 + 1e-14));
  }
}

TEST_CASE("second_derivative_bound_M frozen examples") {
  Rational b(2387, 1000);
  Interval M = second_derivative_bound_M(Rational(6131, 5000), b, Rational(6));
  CHECK(M.hi() < 6.476);
  BF e = exp(BF(1));
  BF a = BF(6131) / 5000;
  BF want = 2 + pow(a, 4) / e + 4 / e + 4 * a * a / (e * sqrt(2 * e)) +
            4 * pow(a, 4) * exp(BF(-2));
  CHECK(encloses(M, want));

  // a = 1
  Interval M1 = second_derivative_bound_M(Rational(1), b, Rational(6));
  BF want1 = 2 + 1 / e + 4 / e + 4 / (e * sqrt(2 * e)) + 4 * exp(BF(-2));
  CHECK(encloses(M1, want1));

  // a -> 0+: limit 2 + 4/e
  Interval M0 = second_derivative_bound_M(Rational(1, 1000000), Rational(0), Rational(6));
  double limit = 2.0 + 4.0 * std::exp(-1.0);
  CHECK(std::abs(M0.mid() - limit) < 1e-5);
}

TEST_CASE("certify_lower_bound: paper parameters clear every printed threshold") {
  NazarovParams p;
  auto cert = certify_lower_bound(p, parse_rational("0.312584"));
  REQUIRE(cert.certified);
  CHECK(rational_from_double(cert.quadrature.trapezoid_sum.lo()) >=
        parse_rational("0.33310717054594"));
  CHECK(rational_from_double(cert.quadrature.integral_lower) >=
        parse_rational("0.33310555154594"));
  CHECK(cert.quadrature.second_derivative_bound.hi() < 6.476);
  CHECK(rational_from_double(cert.prefactor.lo()) >= parse_rational("1.6632596039"));
  CHECK(rational_from_double(cert.inv_sqrt_pi.lo()) >= parse_rational("0.5641895835"));
  CHECK(rational_from_double(cert.constant_lower) >= parse_rational("0.312584"));
  CHECK(cert.J.lo() <= cert.quadrature.trapezoid_sum.lo());
  CHECK(cert.J.hi() >= cert.quadrature.trapezoid_sum.hi());
}

TEST_CASE("certify_lower_bound: unreachable target fails; b = 0 fails") {
  NazarovParams p;
  auto cert = certify_lower_bound(p, parse_rational("0.35"));
  CHECK(!cert.certified);
  CHECK(cert.failing_factor == "constant_lower");

  p.b = Rational(0);
  auto cert0 = certify_lower_bound(p, parse_rational("0.312584"));
  CHECK(!cert0.certified);
  CHECK(cert0.failing_factor == "prefactor");
  CHECK(cert0.constant_lower == 0.0);
}

TEST_CASE("facet_escape_p: trivial and closed-form cases") {
  CHECK(facet_escape_p(5, Interval(0.0), Interval(2.0)).contains(0.5));
  CHECK(facet_escape_p(5, Interval(10.0), Interval(0.0)).contains(0.0));

  // n = 3, S = 1, rho = 1/2: p = (pi/6 - sqrt(3)/8)/(pi/2)
  Interval r = interval_sqrt(Interval(3.0)) / 2.0;
  Interval p3 = facet_escape_p(3, Interval(0.5), r);
  BF want = (kPi / 6 - sqrt(BF(3)) / 8) / (kPi / 2);
  CHECK(p3.lo() <= want + 1e-9);
  CHECK(p3.hi() >= want - 1e-9);
  CHECK(p3.width() < 2e-5 * want.convert_to<double>());

  // n = 2 flat density: p = (1 - x0)/2
  Interval p2 = facet_escape_p(2, Interval(1.0), Interval(1.0));
  BF x0 = 1 / sqrt(BF(2));
  CHECK(encloses(p2, (1 - x0) / 2));
}

TEST_CASE("facet_escape_p: in [0, 1/2], monotone decreasing in rho at fixed r") {
  double prev = 0.51;
  for (double rho : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}) {
    Interval p = facet_escape_p(20, Interval(rho), Interval(4.0));
    CHECK(p.lo() >= 0.0);
    CHECK(p.hi() <= 0.5);
    CHECK(p.hi() < prev);
    prev = p.hi();
  }
}

TEST_CASE("facet_escape_p: cross-check against independent Simpson oracle") {
  SplitMix rng(0x5eed010);
  for (int i = 0; i < 20; ++i) {
    long long n = rng.integer(3, 400);
    double rho = rng.uniform(0.1, 4.0);
    double r = rng.uniform(0.1, 15.0);
    double want = oracle_p(n, rho, r);
    if (want < 1e-250) continue;  // oracle itself at the underflow edge
    Interval p = facet_escape_p(n, Interval(rho), Interval(r));
    REQUIRE(p.lo() <= want * (1 + 1e-7) + 1e-280);
    REQUIRE(p.hi() >= want * (1 - 1e-7));
    REQUIRE(p.width() <= 5e-5 * want + 1e-280);
  }
}

TEST_CASE("facet_escape_p: alternative exponent diagnostic differs but stays close") {
  Interval p = facet_escape_p(50, Interval(2.0), Interval(5.0));
  Interval q = facet_escape_p(50, Interval(2.0), Interval(5.0), true);
  CHECK(!p.intersects(q));  // genuinely different integrand
  CHECK(std::abs(p.mid() - q.mid()) < 0.2 * p.mid());
}

TEST_CASE("asymptote_check_p: ratios near 1 and approaching 1 as n grows") {
  Rational a(6131, 5000);
  auto rows = asymptote_check_p({10000, 1000000}, a, 0.0);
  REQUIRE(rows.size() == 2);
  // frozen oracle ratios: 0.987910164432 and 0.998770705421
  CHECK(rows[0].ratio.lo() > 0.8);
  CHECK(rows[0].ratio.hi() < 1.2);
  CHECK(std::abs(rows[0].ratio.mid() - 0.987910164432) < 1e-4);
  CHECK(std::abs(rows[1].ratio.mid() - 0.998770705421) < 1e-4);
  CHECK(std::abs(rows[1].ratio.mid() - 1.0) < std::abs(rows[0].ratio.mid() - 1.0));

  // w-dependence is captured by the e^{a^2 w} factor
  auto w1 = asymptote_check_p({10000}, a, 1.0);
  double rel = w1[0].ratio.mid() / rows[0].ratio.mid();
  CHECK(rel > 0.8);
  CHECK(rel < 1.2);
  CHECK(std::abs(w1[0].ratio.mid() - 0.954795282304) < 1e-4);
}

TEST_CASE("radial_density_cf: exact small case and n = 10^4 limit values") {
  // n = 2, w chosen so t = 1: c = 1 and value e^{-1/2}
  Interval v2 = radial_density_cf(2, 1.0 - 1.0);
  BF want2 = exp(BF(-0.5));
  CHECK(encloses(v2, want2));

  struct Row { double w; double limit; };
  const Row rows[] = {{0.0, 0.5641895835477563},
                      {1.0, 0.2075537487472940},
                      {-2.0, 0.0103334926701905}};
  for (const auto& row : rows) {
    Interval v = radial_density_cf(10000, row.w);
    CHECK(std::abs(v.mid() - row.limit) <= 0.01);
    // enclosure agrees with the 100-digit oracle
    BF t = sqrt(BF(9999)) + BF(row.w);
    BF lc = -(BF(10000) / 2 - 1) * log(BF(2)) - boost::math::lgamma(BF(5000));
    BF lf = BF(9999) * log(t) - t * t / 2;
    CHECK(encloses(v, exp(lc + lf)));
  }
}

TEST_CASE("mc_facet_membership: exact endpoints") {
  auto one = mc_facet_membership(20, 2.0, 4.0, 1, 1000, 42);
  CHECK(one.frequency == 1.0);

  // r = 0, rho large: survival certain
  auto sure = mc_facet_membership(20, 10.0, 0.0, 30, 2000, 42);
  CHECK(sure.frequency == 1.0);
}

TEST_CASE("mc_facet_membership agrees with (1-p)^{N-1} within 4 standard errors") {
  const long long n = 20, N = 30;
  const double rho = 2.0, r = 4.0;
  auto est = mc_facet_membership(n, rho, r, N, 100000, 20240817);
  Interval p = facet_escape_p(n, Interval(rho), Interval(r));
  Interval survival =
      extremal::certnum::pow_int(Interval(1.0) - p, static_cast<int>(N - 1));
  // frozen oracle: p = 0.0184524214671, (1-p)^29 = 0.582678943074
  CHECK(std::abs(p.mid() - 0.0184524214671) < 1e-6);
  double dist = 0.0;
  if (est.frequency < survival.lo()) dist = survival.lo() - est.frequency;
  if (est.frequency > survival.hi()) dist = est.frequency - survival.hi();
  CHECK(dist <= 4 * est.standard_error);
}

TEST_CASE("mc_escape_frequency matches certified p within 4 standard errors at n = 50") {
  NazarovParams params;
  params.n = 50;
  Interval rho = params.rho();
  auto est = mc_escape_frequency(50, rho.mid(), 7.0, 1000000, 987654321);
  Interval p = facet_escape_p(50, rho, Interval(7.0));
  CHECK(std::abs(p.mid() - 0.000910193959402) < 1e-8);
  double dist = 0.0;
  if (est.frequency < p.lo()) dist = p.lo() - est.frequency;
  if (est.frequency > p.hi()) dist = est.frequency - p.hi();
  CHECK(dist <= 4 * est.standard_error);
}

TEST_CASE("mc reproducibility: same seed, same stream") {
  auto a = mc_facet_membership(10, 1.0, 2.0, 5, 20000, 7);
  auto b = mc_facet_membership(10, 1.0, 2.0, 5, 20000, 7);
  CHECK(a.frequency == b.frequency);
  auto c = mc_facet_membership(10, 1.0, 2.0, 5, 20000, 8);
  CHECK(a.frequency != c.frequency);
}
