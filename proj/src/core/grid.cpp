// SPDX-License-Identifier: Apache-2.0
#include "core/grid.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace slt {

double lp_norm(const GridFunction& g, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be > 0");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : g.samples) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : g.samples) s += std::pow(std::abs(v), p);
  return std::pow(s / static_cast<double>(g.size()), 1.0 / p);
}

double lp_norm(const std::vector<double>& vals, int dim, int n, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be > 0");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : vals) m = std::max(m, std::fabs(v));
    return m;
  }
  double s = 0.0;
  for (double v : vals) s += std::pow(std::fabs(v), p);
  return std::pow(s / static_cast<double>(GridFunction::total(dim, n)), 1.0 / p);
}

double l2_norm(const GridFunction& g) {
  double s = 0.0;
  for (const cplx& v : g.samples) s += std::norm(v);
  return std::sqrt(s / static_cast<double>(g.size()));
}

double rel_l2_error(const GridFunction& a, const GridFunction& b) {
  if (a.dim != b.dim || a.n != b.n) throw std::invalid_argument("rel_l2_error: grid mismatch");
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a.samples[i] - b.samples[i]);
    den += std::norm(b.samples[i]);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

GridFunction random_real_signal(int dim, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  GridFunction g(dim, n);
  for (auto& v : g.samples) v = cplx(gauss(rng), 0.0);
  return g;
}

GridFunction random_bandlimited_signal(int dim, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const size_t total = GridFunction::total(dim, n);
  std::vector<cplx> spec(total);
  std::vector<int> idx(dim, 0);
  for (size_t i = 0; i < total; ++i) {
    double r2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      const double f = signed_freq(idx[a], n);
      r2 += f * f;
    }
    const double r = std::sqrt(r2);
    // Taper off DC and the top octave so the energy sits in covered bands.
    const double hi = 0.25 * n;
    double amp = 0.0;
    if (r >= 0.5 && r <= hi) amp = 1.0;
    if (amp > 0.0) spec[i] = amp * cplx(gauss(rng), gauss(rng));
    int a = dim - 1;
    while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
  }
  GridFunction g = GridFunction::from_spectrum(dim, n, spec);
  // Real part keeps the band limitation (spectrum gets hermitized).
  for (auto& v : g.samples) v = cplx(v.real(), 0.0);
  return g;
}

}  // namespace slt
