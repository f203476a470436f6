// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "core/frame.hpp"

namespace slt {

// Frame coefficients on the translation lattices of a band system.  One
// dense value block per band (plus the low-frequency block), addressed by
// the band's node lattice.  Also used standalone on the paper lattice
// (sigma = 1, no oversampling) for sequence-space experiments.
struct SequenceCoefficients {
  int dim = 0;
  bool torus = true;  // distances wrap modulo 1 when set
  std::vector<Subband> geometry;  // masks stripped, lattice fields kept
  Subband low_geometry;
  std::vector<std::vector<cplx>> values;  // aligned with geometry
  std::vector<cplx> low_values;

  size_t band_count() const { return geometry.size(); }
  void zero_like();  // resize value blocks to the geometry
};

// Geometry-only copy of a band (drops the mask payload).
Subband strip_mask(const Subband& band);

// Abstract paper-lattice band system: cells Q_{j,l,k} with |Q| = 2^{-(d+1)j},
// translations limited to corners in [0,1)^d unless extent > 1.
SequenceCoefficients make_abstract_shear_sequence(int dim, int j_max);
// Dyadic counterpart: cubes 2^{-nu}(Q0 + k).
SequenceCoefficients make_abstract_dyadic_sequence(int dim, int nu_max);

// Position of the coefficient's cell corner x_Q.
std::vector<double> coefficient_position(const SequenceCoefficients& seq, size_t band,
                                         int64_t flat);

}  // namespace slt
