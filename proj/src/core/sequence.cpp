// SPDX-License-Identifier: Apache-2.0
#include "core/sequence.hpp"

#include <stdexcept>

namespace slt {

void SequenceCoefficients::zero_like() {
  values.assign(geometry.size(), {});
  for (size_t b = 0; b < geometry.size(); ++b)
    values[b].assign(static_cast<size_t>(geometry[b].node_count()), cplx(0.0, 0.0));
  low_values.assign(static_cast<size_t>(low_geometry.node_count()), cplx(0.0, 0.0));
}

Subband strip_mask(const Subband& band) {
  Subband g = band;
  g.box = FreqBox{};
  g.support.clear();
  g.values.clear();
  return g;
}

namespace {

Subband abstract_band(BandKind kind, int dim, int cone, int scale,
                      const std::vector<int64_t>& shear) {
  Subband band;
  band.kind = kind;
  band.cone = cone;
  band.scale = scale;
  band.sigma = 1;
  band.shear = shear;
  band.oversample.assign(dim, 1);
  band.counts.assign(dim, 0);
  for (int a = 0; a < dim; ++a) {
    int grow = scale;
    if (kind == BandKind::ShearAtom && a == 0) grow = 2 * scale;
    band.counts[a] = 1 << grow;
  }
  double cells = 1.0;
  for (int a = 0; a < dim; ++a) cells *= band.counts[a];
  band.covol = 1.0 / cells;
  band.scale_volume = band.covol;
  return band;
}

}  // namespace

SequenceCoefficients make_abstract_shear_sequence(int dim, int j_max) {
  if (dim < 2 || j_max < 0) throw std::invalid_argument("make_abstract_shear_sequence: bad args");
  SequenceCoefficients seq;
  seq.dim = dim;
  seq.torus = true;
  for (int j = 0; j <= j_max; ++j) {
    for (int cone = 1; cone <= dim; ++cone) {
      for (const auto& shear : enumerate_shears(j, dim)) {
        Subband band = abstract_band(BandKind::ShearAtom, dim, cone, j, shear);
        const int64_t lim = int64_t{1} << j;
        band.boundary =
            std::any_of(shear.begin(), shear.end(), [&](int64_t l) { return std::abs(l) == lim; });
        seq.geometry.push_back(std::move(band));
      }
    }
  }
  seq.low_geometry = abstract_band(BandKind::Lowpass, dim, 0, 0, {});
  seq.low_geometry.counts.assign(dim, 1);
  seq.low_geometry.covol = 1.0;
  seq.low_geometry.scale_volume = 1.0;
  seq.zero_like();
  return seq;
}

SequenceCoefficients make_abstract_dyadic_sequence(int dim, int nu_max) {
  if (dim < 2 || nu_max < 0) throw std::invalid_argument("make_abstract_dyadic_sequence: bad args");
  SequenceCoefficients seq;
  seq.dim = dim;
  seq.torus = true;
  for (int nu = 0; nu <= nu_max; ++nu)
    seq.geometry.push_back(abstract_band(BandKind::DyadicAtom, dim, 0, nu, {}));
  seq.low_geometry = abstract_band(BandKind::Lowpass, dim, 0, 0, {});
  seq.low_geometry.counts.assign(dim, 1);
  seq.low_geometry.covol = 1.0;
  seq.low_geometry.scale_volume = 1.0;
  seq.zero_like();
  return seq;
}

std::vector<double> coefficient_position(const SequenceCoefficients& seq, size_t band,
                                         int64_t flat) {
  const Subband& g = seq.geometry.at(band);
  std::vector<int> idx(seq.dim);
  for (int a = seq.dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % g.counts[a]);
    flat /= g.counts[a];
  }
  return node_position(g, seq.dim, idx);
}

}  // namespace slt
