// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "core/frame.hpp"
#include "core/sequence.hpp"

namespace slt {

// Per-band convolutions of a grid function with the analysis windows,
// stored spectrally over each band's support box.  Spatial fields are
// materialized on demand (one inverse FFT per band).
struct CoefficientField {
  int dim = 0;
  int n = 0;
  std::vector<std::vector<cplx>> band_spec;  // aligned with the band list
  std::vector<cplx> low_spec;                // over the lowpass box
};

// c_b = f * conj-window of band b, i.e. spectrally F(xi) * mask(xi).
CoefficientField forward_grid(const Frame& frame, const GridFunction& f);
CoefficientField forward_grid(const DyadicStack& stack, const GridFunction& f);

// Reassembles sum_b c_b * window + lowpass term; exact inverse of forward.
GridFunction inverse_grid(const Frame& frame, const CoefficientField& field);
GridFunction inverse_grid(const DyadicStack& stack, const CoefficientField& field);

// Spatial field of one band (full grid).
GridFunction band_field(const Frame& frame, const CoefficientField& field, size_t band);
GridFunction band_field(const DyadicStack& stack, const CoefficientField& field, size_t band);
GridFunction low_field(const Frame& frame, const CoefficientField& field);
GridFunction low_field(const DyadicStack& stack, const CoefficientField& field);

// Same, but materialized into a per-thread scratch buffer; the reference is
// valid until the next scratch call on the same thread.
const std::vector<cplx>& band_field_scratch(const Frame& frame, const CoefficientField& field,
                                            size_t band);
const std::vector<cplx>& band_field_scratch(const DyadicStack& stack,
                                            const CoefficientField& field, size_t band);

// sum_b ||c_b||_2^2 + ||low||_2^2 with the grid quadrature weight.
double field_energy(const Frame& frame, const CoefficientField& field);

// s_Q = sqrt(covol) c_b(x_Q) over each band's translation lattice
// (nearest grid node; exact when the lattice is grid-aligned).
SequenceCoefficients subsample(const Frame& frame, const CoefficientField& field);
SequenceCoefficients subsample(const DyadicStack& stack, const CoefficientField& field);

// T s = sum_Q s_Q atom_Q, accumulated in the frequency domain through the
// lattice phase sums.
GridFunction synthesize_sequence(const Frame& frame, const SequenceCoefficients& seq);
GridFunction synthesize_sequence(const DyadicStack& stack, const SequenceCoefficients& seq);

}  // namespace slt
