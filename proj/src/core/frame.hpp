// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "core/lattice.hpp"
#include "core/windows.hpp"

namespace slt {

enum class FrameVariant { ConeProjected, Smooth };

FrameVariant frame_variant_from_string(const std::string& s);
std::string to_string(FrameVariant v);

// Grid realization of the frame.  Frequencies are the integers
// [-N/2, N/2)^d; continuum windows are evaluated at xi / kFreqScale so that
// every scale 0..j_max has on-grid support and the top scale can be capped
// at Nyquist.  Scale j then occupies |xi_cone| in [2^{2j-2}, 2^{2j+1}].
struct FrameSpec {
  int dim = 2;
  int n = 256;
  int j_max = -1;  // -1 selects the default floor(log2(n)/2) - 1
  FrameVariant variant = FrameVariant::Smooth;
  int meyer_degree = 7;

  static constexpr int kFreqScale = 4;

  static int default_j_max(int n);
  void validate() const;  // throws on violated invariants
};

enum class BandKind { ShearAtom, DyadicAtom, Lowpass };

// One sub-band: its frequency mask (sparse over the grid) plus the
// geometry of its translation lattice.
struct Subband {
  BandKind kind = BandKind::ShearAtom;
  int cone = 1;                         // 1..d (shear atoms)
  int scale = 0;                        // j (shear) or nu (dyadic)
  int sigma = 1;                        // frequency scale of the construction
  int grid_n = 0;
  std::vector<int64_t> shear;           // length d-1 (shear atoms)
  bool boundary = false;                // some |l_i| = 2^j
  bool capped = false;                  // top scale, radial window capped at 1
  // Cone gluing of a smooth boundary atom: (cone, shear) per touching cone.
  std::vector<std::pair<int, std::vector<int64_t>>> aliases;

  FreqBox box;                          // bounding box of the support
  std::vector<uint32_t> support;        // sorted flat storage indices
  std::vector<double> values;           // aligned with support

  // Translation lattice: counts[i] nodes along canonical direction i
  // (direction 0 is the cone axis), oversample[i] the per-direction
  // refinement beyond the critical density.
  std::vector<int> counts;
  std::vector<int> oversample;
  double covol = 1.0;         // volume of one sampling cell on the torus
  double scale_volume = 1.0;  // |Q_j| = sigma^-d 2^{-(d+1)j} (2^{-nu d} dyadic)

  int64_t node_count() const {
    int64_t c = 1;
    for (int v : counts) c *= v;
    return c;
  }
  double mask_at(const std::vector<int>& xi) const;  // signed frequency
  double mask_at_flat(uint32_t flat) const;
};

struct Frame {
  FrameSpec spec;
  WindowBank bank;
  std::vector<Subband> bands;
  Subband lowpass;

  Frame() : bank(7) {}
  int dim() const { return spec.dim; }
  int n() const { return spec.n; }
  int sigma() const { return FrameSpec::kFreqScale; }
};

// Dyadic Littlewood-Paley stack on the same grid (frequency scale 1; scale
// nu occupies |xi| in [2^{nu-1}, 2^{nu+1}], top scale capped).
struct DyadicStack {
  int dim = 2;
  int n = 256;
  int nu_max = -1;  // default log2(n) - 2
  WindowBank bank;
  std::vector<Subband> bands;
  Subband lowpass;

  DyadicStack() : bank(7) {}
};

Frame build_frame(const FrameSpec& spec);
DyadicStack build_dyadic_stack(int dim, int n, int nu_max = -1, int meyer_degree = 7);

// max over grid frequencies of |sum of squared masks + lowpass^2 - 1|.
double verify_parseval(const Frame& frame);
double verify_parseval(const DyadicStack& stack);

// Number of bands (i,m) != (j,l) in the same cone whose nonzero support
// intersects the given band's support.
int overlap_count(const Frame& frame, size_t band_index);

// sup over |x| <= 1/4 of |psi(x)| (1 + sigma |B^[l] A^j x|)^decay_order,
// normalized by the atom's peak value.
double atom_spatial_profile(const Frame& frame, size_t band_index, double decay_order);

// Position (torus coordinates) of the node with storage multi-index idx,
// idx[i] in [0, counts[i]).  Nodes along the cone axis are offset per
// transverse index so the lattice tiles [0,1)^d.
std::vector<double> node_position(const Subband& band, int dim, const std::vector<int>& idx);
// Flattened storage index of the lattice cell containing x.
int64_t node_cell_of(const Subband& band, int dim, const std::vector<double>& x);

int64_t flat_node_index(const Subband& band, const std::vector<int>& idx);

// Visit every lattice node in storage order: fn(flat_index, x) with x the
// node's torus coordinates (buffer reused between calls).
void for_each_node(const Subband& band, int dim,
                   const std::function<void(int64_t, const double*)>& fn);

// Walk a signed-frequency box clipped to the grid (inclusive bounds).
template <typename F>
void for_each_freq(const std::vector<int>& lo, const std::vector<int>& hi, int n, F&& fn) {
  const int dim = static_cast<int>(lo.size());
  std::vector<int> xi(dim), clo(dim), chi(dim);
  for (int a = 0; a < dim; ++a) {
    clo[a] = std::max(lo[a], -n / 2);
    chi[a] = std::min(hi[a], n / 2 - 1);
    if (clo[a] > chi[a]) return;
    xi[a] = clo[a];
  }
  while (true) {
    fn(const_cast<const std::vector<int>&>(xi));
    int a = dim - 1;
    while (a >= 0 && xi[a] == chi[a]) {
      xi[a] = clo[a];
      --a;
    }
    if (a < 0) break;
    ++xi[a];
  }
}

}  // namespace slt
