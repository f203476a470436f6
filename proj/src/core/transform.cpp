// SPDX-License-Identifier: Apache-2.0
#include "core/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "core/par.hpp"

namespace slt {

namespace {

void gather_band(const Subband& band, const std::vector<cplx>& spectrum,
                 std::vector<cplx>& out) {
  out.resize(band.support.size());
  for (size_t k = 0; k < band.support.size(); ++k)
    out[k] = spectrum[band.support[k]] * band.values[k];
}

void scatter_band(const Subband& band, const std::vector<cplx>& band_spec,
                  std::vector<cplx>& spectrum) {
  for (size_t k = 0; k < band.support.size(); ++k)
    spectrum[band.support[k]] += band_spec[k] * band.values[k];
}

void accumulate_plain(const Subband& band, const std::vector<cplx>& contribution,
                      std::vector<cplx>& spectrum) {
  for (size_t k = 0; k < band.support.size(); ++k)
    spectrum[band.support[k]] += contribution[k];
}

CoefficientField forward_impl(const std::vector<Subband>& bands, const Subband& lowpass, int dim,
                              int n, const GridFunction& f) {
  if (f.dim != dim || f.n != n) throw std::invalid_argument("forward: grid mismatch");
  CoefficientField field;
  field.dim = dim;
  field.n = n;
  const auto spectrum = f.spectrum();
  field.band_spec.resize(bands.size());
  parallel_for(bands.size(),
               [&](size_t b) { gather_band(bands[b], spectrum, field.band_spec[b]); });
  gather_band(lowpass, spectrum, field.low_spec);
  return field;
}

GridFunction inverse_impl(const std::vector<Subband>& bands, const Subband& lowpass, int dim,
                          int n, const CoefficientField& field) {
  if (field.dim != dim || field.n != n || field.band_spec.size() != bands.size())
    throw std::invalid_argument("inverse: band set mismatch");
  std::vector<cplx> spectrum(GridFunction::total(dim, n), cplx(0.0, 0.0));
  for (size_t b = 0; b < bands.size(); ++b)
    scatter_band(bands[b], field.band_spec[b], spectrum);
  scatter_band(lowpass, field.low_spec, spectrum);
  return GridFunction::from_spectrum(dim, n, spectrum);
}

// Scratch buffers reused across band materializations on each thread.
thread_local std::vector<cplx> t_spec_scratch;
thread_local std::vector<cplx> t_field_scratch;

// Fills the thread-local field scratch with the band's spatial field and
// returns a reference to it.
const std::vector<cplx>& materialize_band(const Subband& band, int dim, int n,
                                          const std::vector<cplx>& band_spec) {
  const size_t total = GridFunction::total(dim, n);
  t_spec_scratch.assign(total, cplx(0.0, 0.0));
  for (size_t k = 0; k < band.support.size(); ++k)
    t_spec_scratch[band.support[k]] = band_spec[k];
  t_field_scratch.resize(total);
  idft(dim, n, t_spec_scratch.data(), t_field_scratch.data());
  return t_field_scratch;
}

GridFunction band_field_impl(const Subband& band, int dim, int n,
                             const std::vector<cplx>& band_spec) {
  GridFunction g(dim, n);
  g.samples = materialize_band(band, dim, n, band_spec);
  return g;
}

void subsample_band(const Subband& band, int dim, int n, const std::vector<cplx>& band_spec,
                    std::vector<cplx>& out) {
  out.assign(static_cast<size_t>(band.node_count()), cplx(0.0, 0.0));
  if (band.support.empty()) return;
  const auto& field = materialize_band(band, dim, n, band_spec);
  const double w = std::sqrt(band.covol);
  for_each_node(band, dim, [&](int64_t flat, const double* x) {
    size_t f = 0;
    for (int a = 0; a < dim; ++a) {
      int64_t c = static_cast<int64_t>(std::llround(x[a] * n)) % n;
      if (c < 0) c += n;
      f = f * static_cast<size_t>(n) + static_cast<size_t>(c);
    }
    out[static_cast<size_t>(flat)] = w * field[f];
  });
}

SequenceCoefficients subsample_impl(const std::vector<Subband>& bands, const Subband& lowpass,
                                    int dim, int n, const CoefficientField& field) {
  if (field.dim != dim || field.n != n || field.band_spec.size() != bands.size())
    throw std::invalid_argument("subsample: band set mismatch");
  SequenceCoefficients seq;
  seq.dim = dim;
  seq.torus = true;
  seq.geometry.reserve(bands.size());
  for (const auto& b : bands) seq.geometry.push_back(strip_mask(b));
  seq.low_geometry = strip_mask(lowpass);
  seq.values.resize(bands.size());
  parallel_for(bands.size(), [&](size_t b) {
    subsample_band(bands[b], dim, n, field.band_spec[b], seq.values[b]);
  });
  subsample_band(lowpass, dim, n, field.low_spec, seq.low_values);
  return seq;
}

void synthesize_band(const Subband& band, int dim, int n, const std::vector<cplx>& coeffs,
                     std::vector<cplx>& contribution) {
  contribution.assign(band.support.size(), cplx(0.0, 0.0));
  if (band.support.empty()) return;
  bool any = false;
  for (const auto& c : coeffs)
    if (c != cplx(0.0, 0.0)) {
      any = true;
      break;
    }
  if (!any) return;

  // Lattice phase sum sum_k s_k exp(-2 pi i xi . x_k) via a scattered DFT.
  const size_t total = GridFunction::total(dim, n);
  t_spec_scratch.assign(total, cplx(0.0, 0.0));
  for_each_node(band, dim, [&](int64_t flat, const double* x) {
    const cplx s = coeffs[static_cast<size_t>(flat)];
    if (s == cplx(0.0, 0.0)) return;
    size_t f = 0;
    for (int a = 0; a < dim; ++a) {
      int64_t c = static_cast<int64_t>(std::llround(x[a] * n)) % n;
      if (c < 0) c += n;
      f = f * static_cast<size_t>(n) + static_cast<size_t>(c);
    }
    t_spec_scratch[f] += s;
  });
  t_field_scratch.resize(total);
  dft_raw(dim, n, t_spec_scratch.data(), t_field_scratch.data());

  const double w = std::sqrt(band.covol);
  for (size_t k = 0; k < band.support.size(); ++k)
    contribution[k] = w * band.values[k] * t_field_scratch[band.support[k]];
}

GridFunction synthesize_impl(const std::vector<Subband>& bands, const Subband& lowpass, int dim,
                             int n, const SequenceCoefficients& seq) {
  if (seq.dim != dim || seq.values.size() != bands.size())
    throw std::invalid_argument("synthesize: band set mismatch");
  for (size_t b = 0; b < bands.size(); ++b) {
    if (seq.values[b].size() != static_cast<size_t>(bands[b].node_count()))
      throw std::invalid_argument("synthesize: coefficient block size mismatch");
  }
  std::vector<std::vector<cplx>> contributions(bands.size());
  parallel_for(bands.size(), [&](size_t b) {
    synthesize_band(bands[b], dim, n, seq.values[b], contributions[b]);
  });
  std::vector<cplx> spectrum(GridFunction::total(dim, n), cplx(0.0, 0.0));
  for (size_t b = 0; b < bands.size(); ++b)
    accumulate_plain(bands[b], contributions[b], spectrum);
  std::vector<cplx> low_contribution;
  synthesize_band(lowpass, dim, n, seq.low_values, low_contribution);
  accumulate_plain(lowpass, low_contribution, spectrum);
  return GridFunction::from_spectrum(dim, n, spectrum);
}

}  // namespace

CoefficientField forward_grid(const Frame& frame, const GridFunction& f) {
  return forward_impl(frame.bands, frame.lowpass, frame.dim(), frame.n(), f);
}
CoefficientField forward_grid(const DyadicStack& stack, const GridFunction& f) {
  return forward_impl(stack.bands, stack.lowpass, stack.dim, stack.n, f);
}

GridFunction inverse_grid(const Frame& frame, const CoefficientField& field) {
  return inverse_impl(frame.bands, frame.lowpass, frame.dim(), frame.n(), field);
}
GridFunction inverse_grid(const DyadicStack& stack, const CoefficientField& field) {
  return inverse_impl(stack.bands, stack.lowpass, stack.dim, stack.n, field);
}

GridFunction band_field(const Frame& frame, const CoefficientField& field, size_t band) {
  return band_field_impl(frame.bands.at(band), frame.dim(), frame.n(), field.band_spec.at(band));
}
GridFunction band_field(const DyadicStack& stack, const CoefficientField& field, size_t band) {
  return band_field_impl(stack.bands.at(band), stack.dim, stack.n, field.band_spec.at(band));
}
const std::vector<cplx>& band_field_scratch(const Frame& frame, const CoefficientField& field,
                                            size_t band) {
  return materialize_band(frame.bands.at(band), frame.dim(), frame.n(),
                          field.band_spec.at(band));
}
const std::vector<cplx>& band_field_scratch(const DyadicStack& stack,
                                            const CoefficientField& field, size_t band) {
  return materialize_band(stack.bands.at(band), stack.dim, stack.n, field.band_spec.at(band));
}
GridFunction low_field(const Frame& frame, const CoefficientField& field) {
  return band_field_impl(frame.lowpass, frame.dim(), frame.n(), field.low_spec);
}
GridFunction low_field(const DyadicStack& stack, const CoefficientField& field) {
  return band_field_impl(stack.lowpass, stack.dim, stack.n, field.low_spec);
}

double field_energy(const Frame& frame, const CoefficientField& field) {
  (void)frame;
  double e = 0.0;
  for (const auto& spec : field.band_spec)
    for (const auto& v : spec) e += std::norm(v);
  for (const auto& v : field.low_spec) e += std::norm(v);
  return e;
}

SequenceCoefficients subsample(const Frame& frame, const CoefficientField& field) {
  return subsample_impl(frame.bands, frame.lowpass, frame.dim(), frame.n(), field);
}
SequenceCoefficients subsample(const DyadicStack& stack, const CoefficientField& field) {
  return subsample_impl(stack.bands, stack.lowpass, stack.dim, stack.n, field);
}

GridFunction synthesize_sequence(const Frame& frame, const SequenceCoefficients& seq) {
  return synthesize_impl(frame.bands, frame.lowpass, frame.dim(), frame.n(), seq);
}
GridFunction synthesize_sequence(const DyadicStack& stack, const SequenceCoefficients& seq) {
  return synthesize_impl(stack.bands, stack.lowpass, stack.dim, stack.n, seq);
}

}  // namespace slt
