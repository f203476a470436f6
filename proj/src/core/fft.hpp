// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace slt {

using cplx = std::complex<double>;

// d-dimensional DFT on an N^d grid, N per axis.
//   forward: F[xi] = N^-d sum_n f[n] exp(-2 pi i xi.n / N)
//   inverse: f[n]  =       sum_xi F[xi] exp(+2 pi i xi.n / N)
// so forward output holds Fourier-series coefficients of the band-limited
// interpolant.  Plans are cached per (dim, n) and safe to execute from
// several threads on distinct buffers.
void dft(int dim, int n, const cplx* in, cplx* out);
void idft(int dim, int n, const cplx* in, cplx* out);
// Unnormalized forward transform (no N^-d), used for lattice phase sums.
void dft_raw(int dim, int n, const cplx* in, cplx* out);

std::vector<cplx> dft(int dim, int n, const std::vector<cplx>& in);
std::vector<cplx> idft(int dim, int n, const std::vector<cplx>& in);

}  // namespace slt
