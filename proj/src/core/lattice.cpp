// SPDX-License-Identifier: Apache-2.0
#include "core/lattice.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace slt {

namespace {

void check_cone(int cone, int dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
  if (cone < 1 || cone > dim) throw std::invalid_argument("cone axis out of range");
}

// Axes other than the cone axis, ascending; shear component i acts on other_axes[i].
std::vector<int> other_axes(int cone, int dim) {
  std::vector<int> axes;
  axes.reserve(dim - 1);
  for (int a = 0; a < dim; ++a)
    if (a != cone - 1) axes.push_back(a);
  return axes;
}

}  // namespace

bool ShearIndex::boundary() const {
  const int64_t lim = int64_t{1} << scale;
  for (int64_t l : shear)
    if (l == lim || l == -lim) return true;
  return false;
}

Matrix dilation_matrix(int cone, int scale, int dim) {
  check_cone(cone, dim);
  if (scale < 0) throw std::invalid_argument("dilation_matrix: scale must be >= 0");
  Matrix m(dim, std::vector<int64_t>(dim, 0));
  for (int a = 0; a < dim; ++a)
    m[a][a] = (a == cone - 1) ? (int64_t{1} << (2 * scale)) : (int64_t{1} << scale);
  return m;
}

Matrix shear_matrix(int cone, const std::vector<int64_t>& shear, int dim) {
  check_cone(cone, dim);
  if (static_cast<int>(shear.size()) != dim - 1)
    throw std::invalid_argument("shear_matrix: shear vector must have length d-1");
  Matrix m(dim, std::vector<int64_t>(dim, 0));
  for (int a = 0; a < dim; ++a) m[a][a] = 1;
  const auto axes = other_axes(cone, dim);
  for (int i = 0; i < dim - 1; ++i) m[cone - 1][axes[i]] = shear[i];
  return m;
}

int64_t matrix_det(const Matrix& m) {
  // Gaussian elimination over rationals is overkill here: the matrices we
  // produce are triangular up to a row permutation, but compute generically
  // in doubles and round (entries are small integers).
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<double>(m[i][j]);
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0.0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return static_cast<int64_t>(std::llround(det));
}

std::vector<double> apply_BA(int cone, int scale, const std::vector<int64_t>& shear,
                             const std::vector<double>& x) {
  const int dim = static_cast<int>(x.size());
  check_cone(cone, dim);
  if (static_cast<int>(shear.size()) != dim - 1)
    throw std::invalid_argument("apply_BA: shear vector must have length d-1");
  const double two_j = std::ldexp(1.0, scale);
  const double four_j = std::ldexp(1.0, 2 * scale);
  const auto axes = other_axes(cone, dim);
  std::vector<double> y(dim);
  double head = four_j * x[cone - 1];
  for (int i = 0; i < dim - 1; ++i) {
    head += two_j * static_cast<double>(shear[i]) * x[axes[i]];
    y[axes[i]] = two_j * x[axes[i]];
  }
  y[cone - 1] = head;
  return y;
}

std::vector<double> apply_invAB(int cone, int scale, const std::vector<int64_t>& shear,
                                const std::vector<double>& y) {
  const int dim = static_cast<int>(y.size());
  check_cone(cone, dim);
  if (static_cast<int>(shear.size()) != dim - 1)
    throw std::invalid_argument("apply_invAB: shear vector must have length d-1");
  const double inv_two_j = std::ldexp(1.0, -scale);
  const double inv_four_j = std::ldexp(1.0, -2 * scale);
  const auto axes = other_axes(cone, dim);
  std::vector<double> x(dim);
  double head = y[cone - 1];
  for (int i = 0; i < dim - 1; ++i) {
    head -= static_cast<double>(shear[i]) * y[axes[i]];
    x[axes[i]] = inv_two_j * y[axes[i]];
  }
  x[cone - 1] = inv_four_j * head;
  return x;
}

Cell cell_of(const ShearIndex& idx) {
  const int dim = idx.dim();
  const int64_t lim = int64_t{1} << idx.scale;
  for (int64_t l : idx.shear)
    if (l > lim || l < -lim) throw std::invalid_argument("cell_of: |l_i| must be <= 2^j");
  Cell cell;
  cell.owner = idx;
  std::vector<double> k(dim);
  for (int a = 0; a < dim; ++a) k[a] = static_cast<double>(idx.translation[a]);
  cell.lower_left = apply_invAB(idx.cone, idx.scale, idx.shear, k);
  cell.volume = std::ldexp(1.0, -(dim + 1) * idx.scale);
  return cell;
}

DyadicCell dyadic_cell_of(const DyadicIndex& idx, int dim) {
  if (idx.scale < 0) throw std::invalid_argument("dyadic_cell_of: scale must be >= 0");
  DyadicCell cell;
  cell.owner = idx;
  cell.lower_left.resize(dim);
  for (int a = 0; a < dim; ++a)
    cell.lower_left[a] = std::ldexp(static_cast<double>(idx.translation[a]), -idx.scale);
  cell.volume = std::ldexp(1.0, -dim * idx.scale);
  return cell;
}

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

std::vector<double> sphere_point(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(dim);
  double n = 0.0;
  while (n < 1e-6) {
    for (auto& c : x) c = gauss(rng);
    n = norm2(x);
  }
  for (auto& c : x) c /= n;
  return x;
}

}  // namespace

double min_expansion(int cone, int scale, const std::vector<int64_t>& shear, int dim,
                     int sample_count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double two_j = std::ldexp(1.0, scale);
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < sample_count; ++s) {
    const auto x = sphere_point(rng, dim);
    best = std::min(best, norm2(apply_BA(cone, scale, shear, x)) / two_j);
  }
  return best;
}

double min_inverse_contraction(int cone, int scale, const std::vector<int64_t>& shear, int dim,
                               int sample_count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < sample_count; ++s) {
    const auto x = sphere_point(rng, dim);
    best = std::min(best, norm2(apply_invAB(cone, scale, shear, x)));
  }
  return best;
}

int64_t shear_count(int scale, int dim) {
  if (scale < 0) throw std::invalid_argument("shear_count: scale must be >= 0");
  const int64_t per_axis = (int64_t{1} << (scale + 1)) + 1;
  int64_t n = 1;
  for (int i = 0; i < dim - 1; ++i) n *= per_axis;
  return n;
}

std::vector<std::vector<int64_t>> enumerate_shears(int scale, int dim) {
  const int64_t lim = int64_t{1} << scale;
  std::vector<std::vector<int64_t>> out;
  out.reserve(static_cast<size_t>(shear_count(scale, dim)));
  std::vector<int64_t> cur(dim - 1, -lim);
  while (true) {
    out.push_back(cur);
    int i = dim - 2;
    while (i >= 0 && cur[i] == lim) {
      cur[i] = -lim;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<int64_t> cell_containing(int cone, int scale, const std::vector<int64_t>& shear,
                                     const std::vector<double>& x) {
  const auto y = apply_BA(cone, scale, shear, x);
  std::vector<int64_t> k(y.size());
  for (size_t a = 0; a < y.size(); ++a) k[a] = static_cast<int64_t>(std::floor(y[a]));
  return k;
}

}  // namespace slt
