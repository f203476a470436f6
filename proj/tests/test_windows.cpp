// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_main.hpp"

#include <cmath>
#include <random>

#include "core/windows.hpp"

using namespace slt;

TEST_CASE("meyer auxiliary ramp boundary values and symmetry") {
  CHECK(meyer_aux(0.0) == 0.0);
  CHECK(meyer_aux(1.0) == 1.0);
  CHECK(meyer_aux(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(meyer_aux(-3.0) == 0.0);
  CHECK(meyer_aux(7.0) == 1.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int degree : {3, 5, 7, 9}) {
    for (int i = 0; i < 200; ++i) {
      const double t = uni(rng);
      CHECK(meyer_aux(t, degree) + meyer_aux(1.0 - t, degree) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  CHECK_THROWS(meyer_aux(0.5, 4));
}

TEST_CASE("psi1 support and telescoping identity") {
  WindowBank bank;
  CHECK(bank.psi1(0.0) == 0.0);
  CHECK(bank.psi1(0.6) == 0.0);
  CHECK(bank.psi1(0.03) == 0.0);  // below 1/16
  double sum = 0.0;
  for (int j = 0; j <= 4; ++j) {
    const double v = bank.psi1(std::ldexp(0.25, -2 * j));
    sum += v * v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.125, 1000.0);
  for (int i = 0; i < 10000; ++i) {
    const double omega = uni(rng) * (i % 2 ? 1.0 : -1.0);
    double s = 0.0;
    for (int j = 0; j <= 40; ++j) {
      const double v = bank.psi1(std::ldexp(omega, -2 * j));
      s += v * v;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("psi2 three-term identity and support") {
  WindowBank bank;
  CHECK(bank.psi2(1.5) == 0.0);
  CHECK(bank.psi2(-1.0) == 0.0);
  auto three = [&](double w) {
    const double a = bank.psi2(w - 1.0), b = bank.psi2(w), c = bank.psi2(w + 1.0);
    return a * a + b * b + c * c;
  };
  CHECK(three(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(three(0.3) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) CHECK(three(uni(rng)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("v bump identities") {
  WindowBank bank;
  CHECK(bank.v(0.0) == 1.0);
  CHECK(bank.v(1.2) == 0.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::uniform_int_distribution<int> scale(0, 6);
  for (int i = 0; i < 2000; ++i) {
    const double u = uni(rng);
    const int j = scale(rng);
    const int lim = 1 << j;
    double s = 0.0;
    for (int m = -lim; m <= lim; ++m) {
      const double v = bank.v(std::ldexp(u, j) - m);
      s += v * v;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("smooth corona telescoping") {
  WindowBank bank;
  const std::vector<double> xi{0.4, 0.1};
  double phi = bank.big_phi_smooth(xi);
  double s = phi * phi;
  for (int j = 0; j <= 5; ++j) {
    std::vector<double> scaled{std::ldexp(xi[0], -2 * j), std::ldexp(xi[1], -2 * j)};
    const double w = bank.w_corona(scaled);
    s += w * w;
  }
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> p{uni(rng), uni(rng), uni(rng)};
    double phi3 = bank.big_phi_smooth(p);
    double acc = phi3 * phi3;
    for (int j = 0; j <= 20; ++j) {
      std::vector<double> scaled{std::ldexp(p[0], -2 * j), std::ldexp(p[1], -2 * j),
                                 std::ldexp(p[2], -2 * j)};
      const double w = bank.w_corona(scaled);
      acc += w * w;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("dyadic radial partition") {
  WindowBank bank;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(0.0, 200.0);
  for (int i = 0; i < 10000; ++i) {
    const double r = uni(rng);
    double big = bank.big_phi_dyadic_radial(r);
    double acc = big * big;
    for (int nu = 0; nu <= 40; ++nu) {
      const double v = bank.phi_dyadic_radial(std::ldexp(r, -nu));
      acc += v * v;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
  }
  // positivity on the annulus 3/5 <= r <= 5/3 (constant measured, small but nonzero)
  double cmin = 1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double r = 0.6 + i * (5.0 / 3.0 - 0.6) / 1000.0;
    cmin = std::min(cmin, std::fabs(bank.phi_dyadic_radial(r)));
  }
  CHECK(cmin > 0.04);
}

TEST_CASE("lowpass variants") {
  WindowBank bank;
  std::vector<double> zero{0.0, 0.0, 0.0};
  CHECK(bank.eval_lowpass(LowpassVariant::Smooth, zero) == 1.0);
  std::vector<double> p{0.2, 0.0, 0.0};
  CHECK(bank.eval_lowpass(LowpassVariant::Smooth, p) == 0.0);
  std::vector<double> q{0.1, 0.1, 0.1};
  CHECK(bank.eval_lowpass(LowpassVariant::ShearGlobal, q) == 1.0);
  CHECK_THROWS(lowpass_variant_from_string("bogus"));
  std::vector<double> bad{std::nan(""), 0.0};
  CHECK_THROWS(bank.eval_lowpass(LowpassVariant::Smooth, bad));
}

TEST_CASE("windows stay within [0,1], vanish off support, and are Lipschitz") {
  WindowBank bank;
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  const double h = 1e-4;
  double lip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double w = uni(rng);
    for (double v : {bank.psi1(w), bank.psi2(w), bank.phi_smooth(w), bank.phi_dyadic_radial(w),
                     bank.big_phi_dyadic_radial(w), bank.psi1_capped(w)}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    lip = std::max(lip, std::fabs(bank.psi1(w + h) - bank.psi1(w)) / h);
    lip = std::max(lip, std::fabs(bank.psi2(w + h) - bank.psi2(w)) / h);
    if (std::fabs(w) > 0.5) CHECK(bank.psi1(w) == 0.0);
    if (std::fabs(w) > 1.0) CHECK(bank.psi2(w) == 0.0);
    if (std::fabs(w) > 0.125) CHECK(bank.phi_smooth(w) == 0.0);
    if (std::fabs(w) > 2.0) CHECK(bank.phi_dyadic_radial(w) == 0.0);
  }
  CHECK(lip < 100.0);
}
