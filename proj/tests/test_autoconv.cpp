#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "autoconv/profile.hpp"
#include "autoconv/search.hpp"
#include "autoconv/sidon.hpp"
#include "oracle.hpp"

using namespace extremal::autoconv;
using extremal::certnum::Rational;
using extremal::testing::SplitMix;

namespace {

StepProfile random_profile(SplitMix& rng, int cells, int max_num, int max_den) {
  std::vector<Rational> v(static_cast<std::size_t>(cells));
  bool nonzero = false;
  for (auto& x : v) {
    long long num = rng.integer(0, max_num);
    x = Rational(num, rng.integer(1, max_den));
    if (num != 0) nonzero = true;
  }
  if (!nonzero) v[0] = Rational(1);
  return StepProfile::from_values(std::move(v));
}

// independent full-enumeration oracle for the quantized minimum
Rational brute_force_min(int cells, int m) {
  Rational best = Rational(-1);
  std::vector<long long> v(static_cast<std::size_t>(cells), 0);
  while (true) {
    int pos = 0;
    while (pos < cells && v[static_cast<std::size_t>(pos)] == m) {
      v[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == cells) break;
    ++v[static_cast<std::size_t>(pos)];
    std::vector<Rational> heights;
    for (long long h : v) heights.emplace_back(h);
    auto rep = autoconv_sup(StepProfile::from_values(std::move(heights)));
    if (best < 0 || rep.ratio < best) best = rep.ratio;
  }
  return best;
}

}  // namespace

TEST_CASE("autoconv_sup: frozen closed forms") {
  for (int cells : {1, 2, 6, 9}) {
    auto rep = autoconv_sup(StepProfile::constant(cells));
    CHECK(rep.sup_conv == Rational(1, 2));
    CHECK(rep.mass_sq == Rational(1, 4));
    CHECK(rep.ratio == 2);
  }

  // single nonzero cell of two: triangle of height delta = 1/4
  auto single = autoconv_sup(
      StepProfile::from_values({Rational(1), Rational(0)}));
  CHECK(single.sup_conv == Rational(1, 4));
  CHECK(single.mass_sq == Rational(1, 16));
  CHECK(single.ratio == 4);

  CHECK_THROWS(autoconv_sup(StepProfile::from_values({Rational(0), Rational(0)})));
}

TEST_CASE("ratio is 0-homogeneous and translation invariant") {
  SplitMix rng(0x5eed200);
  for (int rep = 0; rep < 40; ++rep) {
    auto p = random_profile(rng, 6, 8, 5);
    auto base = autoconv_sup(p);
    auto scaled = p;
    for (auto& v : scaled.values) v *= Rational(7, 3);
    CHECK(autoconv_sup(scaled).ratio == base.ratio);
  }
  // shift support by one cell inside the window
  auto a = autoconv_sup(StepProfile::from_values(
      {Rational(0), Rational(3), Rational(1), Rational(0)}));
  auto b = autoconv_sup(StepProfile::from_values(
      {Rational(0), Rational(0), Rational(3), Rational(1)}));
  CHECK(a.sup_conv == b.sup_conv);
  CHECK(a.mass_sq == b.mass_sq);
}

TEST_CASE("knot formula dominates a 10x finer sampling grid and is attained") {
  SplitMix rng(0x5eed201);
  for (int rep = 0; rep < 200; ++rep) {
    int cells = static_cast<int>(rng.integer(1, 6));
    auto p = random_profile(rng, cells, 6, 4);
    auto report = autoconv_sup(p);
    bool attained = false;
    // sample knots and 10 subdivisions of every knot interval
    for (int knot = 0; knot <= 2 * cells; ++knot) {
      for (int sub = 0; sub < 10; ++sub) {
        Rational x = Rational(-1, 2) +
                     Rational(knot) * p.delta +
                     Rational(sub, 10) * p.delta;
        Rational val = autoconv_at(p, x);
        REQUIRE(val <= report.sup_conv);
        if (val == report.sup_conv) attained = true;
      }
    }
    REQUIRE(attained);
  }
}

TEST_CASE("quantized_min: frozen exhaustive instance cells = 6, m = 3") {
  auto res = quantized_min(6, 3);
  REQUIRE(res.complete);
  CHECK(res.b_value == Rational(300, 169));
  CHECK(res.chain_bound_value == Rational(300, 169) - Rational(2, 3) - Rational(1, 18));
  CHECK(res.chain_bound_value == Rational(3203, 3042));
  CHECK(res.b_value == brute_force_min(6, 3));

  // argmin realizes the minimum
  auto rep = autoconv_sup(res.argmin);
  CHECK(rep.ratio == res.b_value);
}

TEST_CASE("quantized_min: single cell is the constant profile, ratio 2") {
  for (int m : {1, 3}) {
    auto res = quantized_min(1, m);
    REQUIRE(res.complete);
    CHECK(res.b_value == 2);
  }
}

TEST_CASE("quantized_min agrees with brute force on small instances") {
  for (int cells : {2, 3, 4, 5}) {
    for (int m : {1, 2, 3}) {
      auto res = quantized_min(cells, m);
      REQUIRE(res.complete);
      REQUIRE(res.b_value == brute_force_min(cells, m));
    }
  }
}

TEST_CASE("quantized_min: doubling the level set never increases the minimum") {
  for (int cells : {3, 4, 5}) {
    for (int m : {1, 2, 3}) {
      auto coarse = quantized_min(cells, m);
      auto fine = quantized_min(cells, 2 * m);
      REQUIRE(fine.complete);
      REQUIRE(fine.b_value <= coarse.b_value);
    }
  }
}

TEST_CASE("quantized_min: budget exhaustion reports incomplete") {
  auto res = quantized_min(6, 3, 100);
  CHECK(!res.complete);
  CHECK(res.b_value >= Rational(300, 169));  // best-found is an upper bound
}

TEST_CASE("refined_young_check: equality case and random profiles") {
  // eps = 1/m constant: ||eps*eps||_inf = 1/(2m^2) with equality
  for (int m : {1, 2, 5}) {
    for (int cells : {2, 4, 8}) {
      auto eps = StepProfile::constant(cells, Rational(1, m));
      auto chk = refined_young_check(eps);
      CHECK(chk.lhs == Rational(1, 2LL * m * m));
      CHECK(chk.lhs == chk.rhs_new);
      CHECK(chk.l1_half_linf);
      CHECK(chk.chain_holds);
    }
  }

  // single cell of height 1/m among 8 cells: lhs = delta/m^2 <= 1/(2m^2)
  for (int m : {1, 3}) {
    std::vector<Rational> v(8, Rational(0));
    v[2] = Rational(1, m);
    auto chk = refined_young_check(StepProfile::from_values(v));
    CHECK(chk.lhs == Rational(1, 16) / (static_cast<long long>(m) * m));
    CHECK(chk.chain_holds);
  }

  SplitMix rng(0x5eed202);
  for (int rep = 0; rep < 1000; ++rep) {
    int m = static_cast<int>(rng.integer(1, 6));
    int cells = static_cast<int>(rng.integer(1, 8));
    auto p = random_profile(rng, cells, m, 1);
    for (auto& x : p.values) x /= static_cast<long long>(m) * m;  // ||eps||_inf <= 1/m
    if (p.is_zero()) continue;
    auto chk = refined_young_check(p);
    REQUIRE(chk.l1_half_linf);
    REQUIRE(chk.chain_holds);
  }
}

TEST_CASE("refined_young_check: exhaustive class cells <= 4, m <= 3") {
  for (int cells = 1; cells <= 4; ++cells) {
    for (int m = 1; m <= 3; ++m) {
      std::vector<long long> idx(static_cast<std::size_t>(cells), 0);
      while (true) {
        int pos = 0;
        while (pos < cells && idx[static_cast<std::size_t>(pos)] == m) {
          idx[static_cast<std::size_t>(pos)] = 0;
          ++pos;
        }
        if (pos == cells) break;
        ++idx[static_cast<std::size_t>(pos)];
        std::vector<Rational> v;
        for (long long j : idx)
          v.emplace_back(Rational(j, static_cast<long long>(m) * m));
        auto chk = refined_young_check(StepProfile::from_values(std::move(v)));
        REQUIRE(chk.l1_half_linf);
        REQUIRE(chk.chain_holds);
      }
    }
  }
}

TEST_CASE("sigma_from_c round trips") {
  CHECK(sigma_from_c(Rational(2)) == 1.0);
  CHECK(sigma_from_c(Rational(1, 2)) == 2.0);
  CHECK(sigma_from_c(Rational(12802, 10000)) ==
        doctest::Approx(1.2499).epsilon(1e-4));
  CHECK_THROWS(sigma_from_c(Rational(0)));
}

TEST_CASE("chain_bound: frozen arithmetic of the final constant") {
  // b = 1.28 + 2/50 + 1/2500 gives exactly 1.2802
  Rational b = Rational(128, 100) + Rational(2, 50) + Rational(1, 2500);
  CHECK(b == Rational(3301, 2500));
  CHECK(chain_bound(b, 50) == Rational(12802, 10000));
  CHECK(chain_bound(Rational(300, 169), 3) == Rational(3203, 3042));
  // any b above the threshold clears 1.2802
  CHECK(chain_bound(b + Rational(1, 100000), 50) >= Rational(12802, 10000));
}

TEST_CASE("sidon_check: frozen examples and both counting conventions") {
  CHECK(is_g_sidon({1}, 1));
  CHECK(is_g_sidon({1, 2, 5, 11}, 1));
  CHECK(!is_g_sidon({1, 2, 3}, 1));
  CHECK(is_g_sidon({1, 2, 3}, 2));

  auto chk = sidon_check({1, 2, 3}, 1);
  CHECK(chk.max_unordered == 2);  // 4 = 1+3 = 2+2
  CHECK(chk.worst_sum == 4);
  CHECK(chk.max_ordered == 3);    // (1,3), (3,1), (2,2)
}

TEST_CASE("beta_g: frozen values and witness validity") {
  auto b2 = beta_g(2, 1);
  CHECK(b2.size == 2);
  auto b7 = beta_g(7, 1);
  CHECK(b7.size == 4);
  CHECK(is_g_sidon(b7.witness, 1));
  CHECK(static_cast<int>(b7.witness.size()) == 4);

  // frozen tables from the all-subsets oracle
  const int beta1[] = {1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 4, 5};
  const int beta2[] = {1, 2, 3, 4, 4, 5, 5, 6, 6, 6, 7, 7};
  for (int n = 1; n <= 12; ++n) {
    REQUIRE(beta_g(n, 1).size == beta1[n - 1]);
    REQUIRE(beta_g(n, 2).size == beta2[n - 1]);
  }
}

TEST_CASE("beta_g: monotone in g, witnesses always verify") {
  for (int n : {5, 9, 13, 20}) {
    int prev = 0;
    for (int g = 1; g <= 3; ++g) {
      auto res = beta_g(n, g);
      REQUIRE(res.size >= prev);
      REQUIRE(is_g_sidon(res.witness, g));
      prev = res.size;
    }
  }
  CHECK_THROWS(beta_g(31, 1));
}
