// SPDX-License-Identifier: Apache-2.0
#include "test_main.hpp"

#include <cmath>
#include <random>

#include "core/lattice.hpp"

using namespace slt;

TEST_CASE("dilation matrices") {
  const Matrix a = dilation_matrix(1, 1, 2);
  CHECK(a == Matrix{{4, 0}, {0, 2}});
  CHECK(dilation_matrix(1, 0, 3) == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(dilation_matrix(3, 2, 3) == Matrix{{4, 0, 0}, {0, 4, 0}, {0, 0, 16}});
  for (int d : {2, 3}) {
    for (int j = 0; j <= 4; ++j) {
      CHECK(matrix_det(dilation_matrix(1, j, d)) == int64_t{1} << ((d + 1) * j));
    }
  }
  CHECK_THROWS(dilation_matrix(1, -1, 2));
  CHECK_THROWS(dilation_matrix(4, 0, 3));
}

TEST_CASE("shear matrices") {
  CHECK(shear_matrix(1, {1}, 2) == Matrix{{1, 1}, {0, 1}});
  CHECK(shear_matrix(1, {0, 0}, 3) == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(shear_matrix(3, {1, 2}, 3) == Matrix{{1, 0, 0}, {0, 1, 0}, {1, 2, 1}});
  CHECK(matrix_det(shear_matrix(2, {-3, 5}, 3)) == 1);
  CHECK_THROWS(shear_matrix(1, {1, 2}, 2));
}

TEST_CASE("apply_BA matches the displayed column form") {
  const auto y = apply_BA(1, 1, {1}, {1.0, 1.0});
  CHECK(y[0] == doctest::Approx(6.0));
  CHECK(y[1] == doctest::Approx(2.0));
  const auto z = apply_BA(1, 0, {0}, {0.3, -0.7});
  CHECK(z[0] == doctest::Approx(0.3));
  CHECK(z[1] == doctest::Approx(-0.7));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::uniform_int_distribution<int> scale(0, 4), dpick(2, 3);
  for (int i = 0; i < 100; ++i) {
    const int d = dpick(rng), j = scale(rng);
    std::uniform_int_distribution<int64_t> lpick(-(int64_t{1} << j), int64_t{1} << j);
    std::uniform_int_distribution<int> cpick(1, d);
    const int cone = cpick(rng);
    std::vector<int64_t> l(d - 1);
    for (auto& v : l) v = lpick(rng);
    std::vector<double> x(d);
    for (auto& v : x) v = uni(rng);
    const auto round_trip = apply_invAB(cone, j, l, apply_BA(cone, j, l, x));
    for (int a = 0; a < d; ++a) CHECK(round_trip[a] == doctest::Approx(x[a]).epsilon(1e-14));
  }
}

TEST_CASE("cells") {
  ShearIndex origin{1, 0, {0}, {0, 0}};
  const Cell c0 = cell_of(origin);
  CHECK(c0.volume == 1.0);
  CHECK(c0.lower_left == std::vector<double>{0.0, 0.0});

  ShearIndex idx{1, 2, {3}, {5, -2}};
  CHECK(cell_of(idx).volume == doctest::Approx(std::ldexp(1.0, -6)));

  ShearIndex ex{1, 1, {1}, {1, 0}};
  const Cell c = cell_of(ex);
  CHECK(c.lower_left[0] == doctest::Approx(0.25));
  CHECK(c.lower_left[1] == doctest::Approx(0.0));

  DyadicCell dc = dyadic_cell_of(DyadicIndex{3, {1, 2}}, 2);
  CHECK(dc.volume == doctest::Approx(std::ldexp(1.0, -6)));
  CHECK(dc.lower_left[0] == doctest::Approx(0.125));
  CHECK(dc.lower_left[1] == doctest::Approx(0.25));

  CHECK(ShearIndex{1, 2, {4, 0}, {0, 0, 0}}.boundary());
  CHECK_FALSE(ShearIndex{1, 2, {3, -3}, {0, 0, 0}}.boundary());
}

TEST_CASE("nested-ellipsoid expansion bound") {
  CHECK(min_expansion(1, 0, {0}, 2, 2000) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(min_expansion(1, 3, {8}, 2, 2000) >= 0.5);
  CHECK(min_expansion(1, 2, {0}, 2, 2000) >= 1.0 - 1e-12);  // diagonal case
  for (const auto& l : enumerate_shears(2, 3))
    CHECK(min_expansion(1, 2, l, 3, 1000) >= 0.25);
}

TEST_CASE("inverse contraction bound") {
  // The usable inverse bound is |A^-j B^-[l] x| >= (2d-1)^{-1/2} 2^{-2j} |x|
  // (Frobenius bound on B^[l] A^j).
  for (int j : {0, 1, 2, 3}) {
    for (int d : {2, 3}) {
      std::mt19937_64 rng(101 + j + d);
      std::uniform_int_distribution<int64_t> lpick(-(int64_t{1} << j), int64_t{1} << j);
      std::vector<int64_t> l(d - 1);
      for (auto& v : l) v = lpick(rng);
      const double bound = std::ldexp(1.0 / std::sqrt(2.0 * d - 1.0), -2 * j);
      CHECK(min_inverse_contraction(1, j, l, d, 1000) >= bound * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("shear counts") {
  CHECK(shear_count(0, 2) == 3);
  CHECK(shear_count(2, 2) == 9);
  CHECK(shear_count(1, 3) == 25);
  for (int d : {2, 3}) {
    for (int j = 0; j <= 3; ++j) {
      CHECK(static_cast<int64_t>(enumerate_shears(j, d).size()) == shear_count(j, d));
    }
  }
}

TEST_CASE("cells tile space for fixed (j,l)") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  const int j = 2;
  const std::vector<int64_t> l{3};
  for (int i = 0; i < 10000; ++i) {
    std::vector<double> x{uni(rng), uni(rng)};
    const auto k = cell_containing(1, j, l, x);
    const auto y = apply_BA(1, j, l, x);
    for (int a = 0; a < 2; ++a) {
      const double frac = y[a] - static_cast<double>(k[a]);
      CHECK(frac >= 0.0);
      CHECK(frac < 1.0);
    }
  }
}
