// SPDX-License-Identifier: Apache-2.0
#include "core/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace slt {

namespace {

struct PlanKey {
  int dim;
  int n;
  int sign;
  bool operator<(const PlanKey& o) const {
    return std::tie(dim, n, sign) < std::tie(o.dim, o.n, o.sign);
  }
};

std::mutex g_plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
  static std::map<PlanKey, fftw_plan> cache;
  return cache;
}

fftw_plan get_plan(int dim, int n, int sign) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  const PlanKey key{dim, n, sign};
  auto it = plan_cache().find(key);
  if (it != plan_cache().end()) return it->second;

  size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= static_cast<size_t>(n);
  std::vector<cplx> scratch_in(total), scratch_out(total);
  std::vector<int> sizes(dim, n);
  // FFTW_UNALIGNED lets the plan run on any std::vector storage.
  fftw_plan plan = fftw_plan_dft(dim, sizes.data(),
                                 reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                 reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan) throw std::runtime_error("fftw plan creation failed");
  plan_cache().emplace(key, plan);
  return plan;
}

size_t grid_size(int dim, int n) {
  size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= static_cast<size_t>(n);
  return total;
}

}  // namespace

void dft_raw(int dim, int n, const cplx* in, cplx* out) {
  fftw_plan plan = get_plan(dim, n, FFTW_FORWARD);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void dft(int dim, int n, const cplx* in, cplx* out) {
  dft_raw(dim, n, in, out);
  const size_t total = grid_size(dim, n);
  const double scale = 1.0 / static_cast<double>(total);
  for (size_t i = 0; i < total; ++i) out[i] *= scale;
}

void idft(int dim, int n, const cplx* in, cplx* out) {
  fftw_plan plan = get_plan(dim, n, FFTW_BACKWARD);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

std::vector<cplx> dft(int dim, int n, const std::vector<cplx>& in) {
  std::vector<cplx> out(in.size());
  dft(dim, n, in.data(), out.data());
  return out;
}

std::vector<cplx> idft(int dim, int n, const std::vector<cplx>& in) {
  std::vector<cplx> out(in.size());
  idft(dim, n, in.data(), out.data());
  return out;
}

}  // namespace slt
