// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/fft.hpp"

namespace slt {

// Signed frequency box, inclusive bounds per axis.
struct FreqBox {
  std::vector<int> lo, hi;
  bool empty = true;

  void include(const std::vector<int>& xi) {
    if (empty) {
      lo = hi = xi;
      empty = false;
      return;
    }
    for (size_t a = 0; a < xi.size(); ++a) {
      if (xi[a] < lo[a]) lo[a] = xi[a];
      if (xi[a] > hi[a]) hi[a] = xi[a];
    }
  }
  int64_t count() const {
    if (empty) return 0;
    int64_t c = 1;
    for (size_t a = 0; a < lo.size(); ++a) c *= hi[a] - lo[a] + 1;
    return c;
  }
};

// Periodic samples of a function on [0,1)^d, N per axis, row-major.
struct GridFunction {
  int dim = 0;
  int n = 0;
  std::vector<cplx> samples;

  GridFunction() = default;
  GridFunction(int dim_, int n_) : dim(dim_), n(n_), samples(total(dim_, n_)) {}

  static size_t total(int dim, int n) {
    size_t t = 1;
    for (int a = 0; a < dim; ++a) t *= static_cast<size_t>(n);
    return t;
  }
  size_t size() const { return samples.size(); }

  std::vector<cplx> spectrum() const { return dft(dim, n, samples); }
  static GridFunction from_spectrum(int dim, int n, const std::vector<cplx>& spec) {
    GridFunction g(dim, n);
    g.samples = idft(dim, n, spec);
    return g;
  }
};

// Iteration over the frequency grid in storage order; signed frequency of
// storage index i along an axis is i <= n/2-1 ? i : i-n.
inline int signed_freq(int storage, int n) { return storage < (n + 1) / 2 ? storage : storage - n; }
inline int storage_freq(int xi, int n) { return xi >= 0 ? xi : xi + n; }

// Row-major flat index from per-axis storage indices.
inline size_t flat_index(const std::vector<int>& idx, int n) {
  size_t f = 0;
  for (int v : idx) f = f * static_cast<size_t>(n) + static_cast<size_t>(v);
  return f;
}

// L^p quadrature norm with weight N^-d: (N^-d sum |f|^p)^(1/p); sup for p=inf.
double lp_norm(const GridFunction& g, double p);
double lp_norm(const std::vector<double>& vals, int dim, int n, double p);

// l2 norm of samples with the same quadrature weight.
double l2_norm(const GridFunction& g);

double rel_l2_error(const GridFunction& a, const GridFunction& b);

// Deterministic test signals.
GridFunction random_real_signal(int dim, int n, uint64_t seed);
// Random real signal whose spectrum is tapered to the mid-frequency range.
GridFunction random_bandlimited_signal(int dim, int n, uint64_t seed);

}  // namespace slt
