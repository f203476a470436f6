// SPDX-License-Identifier: Apache-2.0
#include "core/frame.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/par.hpp"

namespace slt {

namespace {

std::vector<int> other_axes(int cone, int dim) {
  std::vector<int> axes;
  axes.reserve(dim - 1);
  for (int a = 0; a < dim; ++a)
    if (a != cone - 1) axes.push_back(a);
  return axes;
}

// 0 when xi sits in the low-frequency box, else the 1-based cone axis
// (largest |component|, smallest axis index on ties).
int assigned_cone(const std::vector<int>& xi) {
  int best = 0, arg = -1;
  for (size_t a = 0; a < xi.size(); ++a) {
    const int v = std::abs(xi[a]);
    if (v > best) {
      best = v;
      arg = static_cast<int>(a);
    }
  }
  return best == 0 ? 0 : arg + 1;
}

double angular_product(const WindowBank& bank, int cone, int scale,
                       const std::vector<int64_t>& shear, const std::vector<int>& xi) {
  const double xc = static_cast<double>(xi[cone - 1]);
  if (xc == 0.0) return 0.0;
  const double two_j = std::ldexp(1.0, scale);
  const int dim = static_cast<int>(xi.size());
  double p = 1.0;
  int i = 0;
  for (int a = 0; a < dim; ++a) {
    if (a == cone - 1) continue;
    p *= bank.psi2(two_j * static_cast<double>(xi[a]) / xc - static_cast<double>(shear[i++]));
    if (p == 0.0) return 0.0;
  }
  return p;
}

double shear_mask_value(const WindowBank& bank, FrameVariant variant, const Subband& band,
                        const std::vector<int>& xi) {
  const int dim = static_cast<int>(xi.size());
  const double inv_sigma = 1.0 / band.sigma;
  double radial = 0.0;
  if (variant == FrameVariant::Smooth) {
    double scaled[4];
    for (int a = 0; a < dim; ++a) scaled[a] = std::ldexp(inv_sigma * xi[a], -2 * band.scale);
    std::span<const double> sp(scaled, static_cast<size_t>(dim));
    radial = band.capped ? bank.w_corona_capped(sp) : bank.w_corona(sp);
  } else {
    const double w = std::ldexp(inv_sigma * xi[band.cone - 1], -2 * band.scale);
    radial = band.capped ? bank.psi1_capped(w) : bank.psi1(w);
  }
  if (radial == 0.0) return 0.0;

  double angular = 0.0;
  if (variant == FrameVariant::ConeProjected) {
    if (assigned_cone(xi) != band.cone) return 0.0;
    angular = angular_product(bank, band.cone, band.scale, band.shear, xi);
  } else if (!band.boundary) {
    angular = angular_product(bank, band.cone, band.scale, band.shear, xi);
  } else {
    const int ac = assigned_cone(xi);
    if (ac == 0) return 0.0;
    for (const auto& [cone, shear] : band.aliases) {
      if (cone == ac) {
        angular = angular_product(bank, cone, band.scale, shear, xi);
        break;
      }
    }
  }
  return radial * angular;
}

// Evaluate a band's mask over the symmetric candidate box; keep the sparse
// support (sorted by flat storage index) and the tight bounding box.
template <typename Eval>
void fill_band(Subband& band, int dim, int n, int radius, Eval&& eval) {
  band.grid_n = n;
  std::vector<std::pair<uint32_t, double>> nz;
  FreqBox box;
  std::vector<int> lo(dim, -radius), hi(dim, radius);
  std::vector<int> st(dim);
  for_each_freq(lo, hi, n, [&](const std::vector<int>& xi) {
    const double v = eval(xi);
    if (v == 0.0) return;
    for (int a = 0; a < dim; ++a) st[a] = storage_freq(xi[a], n);
    nz.emplace_back(static_cast<uint32_t>(flat_index(st, n)), v);
    box.include(xi);
  });
  std::sort(nz.begin(), nz.end());
  band.box = box;
  band.support.resize(nz.size());
  band.values.resize(nz.size());
  for (size_t i = 0; i < nz.size(); ++i) {
    band.support[i] = nz[i].first;
    band.values[i] = nz[i].second;
  }
}

int64_t ceil_div(int64_t a, int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// Signed frequency vector of a flat storage index.
void unflatten_freq(uint32_t flat, int dim, int n, std::vector<int>& xi) {
  for (int a = dim - 1; a >= 0; --a) {
    xi[a] = signed_freq(static_cast<int>(flat % static_cast<uint32_t>(n)), n);
    flat /= static_cast<uint32_t>(n);
  }
}

// Canonical eta coordinates: eta = (xi / sigma) A^-j B^[-l] for shear
// atoms (direction 0 on the cone axis), xi / (sigma 2^scale) otherwise.
void eta_coords(const Subband& band, int dim, const std::vector<int>& xi, double* eta) {
  if (band.kind == BandKind::ShearAtom) {
    const double xc = static_cast<double>(xi[band.cone - 1]);
    eta[0] = std::ldexp(xc / band.sigma, -2 * band.scale);
    int i = 0;
    for (int a = 0; a < dim; ++a) {
      if (a == band.cone - 1) continue;
      const double num = std::ldexp(static_cast<double>(xi[a]), band.scale) -
                         static_cast<double>(band.shear[i]) * xc;
      eta[i + 1] = std::ldexp(num / band.sigma, -2 * band.scale);
      ++i;
    }
  } else {
    for (int a = 0; a < dim; ++a)
      eta[a] = std::ldexp(static_cast<double>(xi[a]) / band.sigma, -band.scale);
  }
}

// Per-direction oversampling from the support extent in eta coordinates,
// then the lattice counts and cell volume.
void assign_lattice(Subband& band, int dim, int n) {
  std::vector<double> lo(dim, 0.0), hi(dim, 0.0);
  bool first = true;
  double eta[4];
  std::vector<int> xi(dim);
  for (size_t k = 0; k < band.support.size(); ++k) {
    unflatten_freq(band.support[k], dim, n, xi);
    eta_coords(band, dim, xi, eta);
    for (int a = 0; a < dim; ++a) {
      if (first) {
        lo[a] = hi[a] = eta[a];
      } else {
        lo[a] = std::min(lo[a], eta[a]);
        hi[a] = std::max(hi[a], eta[a]);
      }
    }
    first = false;
  }
  band.oversample.assign(dim, 1);
  for (int a = 0; a < dim; ++a) {
    const double extent = hi[a] - lo[a];
    while (extent >= static_cast<double>(band.oversample[a]) - 1e-9) band.oversample[a] *= 2;
  }
  band.counts.assign(dim, 0);
  for (int a = 0; a < dim; ++a) {
    int grow = band.scale;
    if (band.kind == BandKind::ShearAtom && a == 0) grow = 2 * band.scale;
    if (band.kind == BandKind::Lowpass) grow = 0;
    band.counts[a] = band.sigma * band.oversample[a] * (1 << grow);
  }
  double cells = 1.0;
  for (int a = 0; a < dim; ++a) cells *= band.counts[a];
  band.covol = 1.0 / cells;
  if (band.kind == BandKind::ShearAtom) {
    band.scale_volume =
        std::ldexp(std::pow(static_cast<double>(band.sigma), -dim), -(dim + 1) * band.scale);
  } else if (band.kind == BandKind::DyadicAtom) {
    band.scale_volume = std::ldexp(1.0, -dim * band.scale);
  } else {
    band.scale_volume = std::pow(static_cast<double>(band.sigma), -dim);
  }
}

// Exact integer check that distinct support frequencies stay distinct
// modulo the sampling lattice's dual.
void check_alias_free(const Subband& band, int dim, int n) {
  if (band.support.empty()) return;
  std::vector<std::array<int64_t, 4>> keys;
  keys.reserve(band.support.size());
  std::vector<int> axes;
  if (band.kind == BandKind::ShearAtom) axes = other_axes(band.cone, dim);
  std::vector<int> xi(dim);
  for (size_t k = 0; k < band.support.size(); ++k) {
    unflatten_freq(band.support[k], dim, n, xi);
    std::array<int64_t, 4> key{0, 0, 0, 0};
    if (band.kind == BandKind::ShearAtom) {
      const int64_t big = int64_t{band.sigma} << (2 * band.scale);
      const int64_t xc = xi[band.cone - 1];
      int64_t period = band.oversample[0] * big;
      key[0] = ((xc % period) + period) % period;
      for (int i = 0; i < dim - 1; ++i) {
        const int64_t num = (int64_t{xi[axes[i]]} << band.scale) - band.shear[i] * xc;
        period = band.oversample[i + 1] * big;
        key[i + 1] = ((num % period) + period) % period;
      }
    } else {
      for (int a = 0; a < dim; ++a) {
        const int64_t period = (int64_t{band.oversample[a]} * band.sigma) << band.scale;
        key[a] = ((int64_t{xi[a]} % period) + period) % period;
      }
    }
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw std::runtime_error("frame construction: band sampling lattice aliases");
}

void finish_band(Subband& band, int dim, int n) {
  assign_lattice(band, dim, n);
  check_alias_free(band, dim, n);
}

}  // namespace

double Subband::mask_at(const std::vector<int>& xi) const {
  if (box.empty) return 0.0;
  size_t f = 0;
  for (size_t a = 0; a < xi.size(); ++a) {
    if (xi[a] < box.lo[a] || xi[a] > box.hi[a]) return 0.0;
    f = f * static_cast<size_t>(grid_n) + static_cast<size_t>(storage_freq(xi[a], grid_n));
  }
  return mask_at_flat(static_cast<uint32_t>(f));
}

double Subband::mask_at_flat(uint32_t flat) const {
  const auto it = std::lower_bound(support.begin(), support.end(), flat);
  if (it == support.end() || *it != flat) return 0.0;
  return values[static_cast<size_t>(it - support.begin())];
}

FrameVariant frame_variant_from_string(const std::string& s) {
  if (s == "cone_projected") return FrameVariant::ConeProjected;
  if (s == "smooth") return FrameVariant::Smooth;
  throw std::invalid_argument("unknown frame variant: " + s);
}

std::string to_string(FrameVariant v) {
  return v == FrameVariant::ConeProjected ? "cone_projected" : "smooth";
}

int FrameSpec::default_j_max(int n) {
  int log2n = 0;
  while ((1 << (log2n + 1)) <= n) ++log2n;
  return log2n / 2 - 1;
}

void FrameSpec::validate() const {
  if (dim < 2 || dim > 4) throw std::invalid_argument("FrameSpec: dim must be 2, 3 or 4");
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("FrameSpec: n must be a power of two >= 8");
  if (meyer_degree < 3) throw std::invalid_argument("FrameSpec: meyer_degree must be >= 3");
  const int jm = j_max >= 0 ? j_max : default_j_max(n);
  if (jm < 0) throw std::invalid_argument("FrameSpec: grid too small");
  // Top-scale rising edge must fit: sigma 2^{2 j_max - 3} <= n / 2.
  if (jm >= 2 && (int64_t{kFreqScale} << (2 * jm - 3)) > n / 2)
    throw std::invalid_argument("FrameSpec: j_max too large for the grid");
}

Frame build_frame(const FrameSpec& spec_in) {
  FrameSpec spec = spec_in;
  spec.validate();
  if (spec.j_max < 0) spec.j_max = FrameSpec::default_j_max(spec.n);

  Frame frame;
  frame.spec = spec;
  frame.bank = WindowBank(spec.meyer_degree);
  const int d = spec.dim, n = spec.n, sigma = FrameSpec::kFreqScale;

  for (int j = 0; j <= spec.j_max; ++j) {
    const int64_t lim = int64_t{1} << j;
    for (int cone = 1; cone <= d; ++cone) {
      for (const auto& shear : enumerate_shears(j, d)) {
        Subband band;
        band.kind = BandKind::ShearAtom;
        band.cone = cone;
        band.scale = j;
        band.sigma = sigma;
        band.grid_n = n;
        band.shear = shear;
        band.capped = (j == spec.j_max);
        band.boundary = std::any_of(shear.begin(), shear.end(),
                                    [&](int64_t l) { return l == lim || l == -lim; });
        if (spec.variant == FrameVariant::Smooth && band.boundary) {
          // Direction vector over axes, entries scaled by 2^j; boundary
          // cells are shared by every cone whose axis entry is extremal.
          std::vector<int64_t> p(d);
          p[cone - 1] = lim;
          const auto axes = other_axes(cone, d);
          for (int i = 0; i < d - 1; ++i) p[axes[i]] = shear[i];
          int estar = 0;
          while (std::abs(p[estar]) != lim) ++estar;
          if (p[estar] < 0)
            for (auto& c : p) c = -c;
          std::vector<int64_t> canon_shear;
          for (int a : other_axes(estar + 1, d)) canon_shear.push_back(p[a]);
          if (estar + 1 != cone || canon_shear != shear) continue;  // alias of another band
          for (int a = 0; a < d; ++a) {
            if (std::abs(p[a]) != lim) continue;
            const int64_t sgn = p[a] > 0 ? 1 : -1;
            std::vector<int64_t> alias_shear;
            for (int b : other_axes(a + 1, d)) alias_shear.push_back(sgn * p[b]);
            band.aliases.emplace_back(a + 1, std::move(alias_shear));
          }
        }
        frame.bands.push_back(std::move(band));
      }
    }
  }

  parallel_for(frame.bands.size(), [&](size_t bi) {
    Subband& band = frame.bands[bi];
    const int64_t outer = int64_t{sigma} << (2 * band.scale + 1);
    const int radius = band.capped ? n / 2 : static_cast<int>(std::min<int64_t>(n / 2, outer));
    fill_band(band, d, n, radius, [&](const std::vector<int>& xi) {
      return shear_mask_value(frame.bank, spec.variant, band, xi);
    });
    finish_band(band, d, n);
  });

  frame.lowpass.kind = BandKind::Lowpass;
  frame.lowpass.cone = 0;
  frame.lowpass.scale = 0;
  frame.lowpass.sigma = sigma;
  frame.lowpass.grid_n = n;
  fill_band(frame.lowpass, d, n, sigma, [&](const std::vector<int>& xi) {
    double xc[4];
    for (int a = 0; a < d; ++a) xc[a] = static_cast<double>(xi[a]) / sigma;
    std::span<const double> sp(xc, static_cast<size_t>(d));
    if (spec.variant == FrameVariant::Smooth) return frame.bank.big_phi_smooth(sp);
    return assigned_cone(xi) == 0 ? frame.bank.big_psi(sp) : 0.0;
  });
  finish_band(frame.lowpass, d, n);
  return frame;
}

DyadicStack build_dyadic_stack(int dim, int n, int nu_max, int meyer_degree) {
  if (dim < 2) throw std::invalid_argument("build_dyadic_stack: dim must be >= 2");
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("build_dyadic_stack: n must be a power of two >= 8");
  DyadicStack stack;
  stack.dim = dim;
  stack.n = n;
  stack.bank = WindowBank(meyer_degree);
  int log2n = 0;
  while ((1 << (log2n + 1)) <= n) ++log2n;
  stack.nu_max = nu_max >= 0 ? nu_max : log2n - 2;
  if ((int64_t{1} << (stack.nu_max + 1)) > n)
    throw std::invalid_argument("build_dyadic_stack: nu_max too large for the grid");

  for (int nu = 0; nu <= stack.nu_max; ++nu) {
    Subband band;
    band.kind = BandKind::DyadicAtom;
    band.cone = 0;
    band.scale = nu;
    band.sigma = 1;
    band.grid_n = n;
    band.capped = (nu == stack.nu_max);
    stack.bands.push_back(std::move(band));
  }
  parallel_for(stack.bands.size(), [&](size_t bi) {
    Subband& band = stack.bands[bi];
    const int nu = band.scale;
    const int radius = band.capped ? n / 2 : std::min(n / 2, 2 << nu);
    fill_band(band, dim, n, radius, [&](const std::vector<int>& xi) {
      double r2 = 0.0;
      for (int v : xi) r2 += static_cast<double>(v) * v;
      const double r = std::ldexp(std::sqrt(r2), -nu);
      return band.capped ? stack.bank.phi_dyadic_capped_radial(r)
                         : stack.bank.phi_dyadic_radial(r);
    });
    finish_band(band, dim, n);
  });

  stack.lowpass.kind = BandKind::Lowpass;
  stack.lowpass.cone = 0;
  stack.lowpass.scale = 0;
  stack.lowpass.sigma = 1;
  stack.lowpass.grid_n = n;
  fill_band(stack.lowpass, dim, n, 2, [&](const std::vector<int>& xi) {
    double r2 = 0.0;
    for (int v : xi) r2 += static_cast<double>(v) * v;
    return stack.bank.big_phi_dyadic_radial(std::sqrt(r2));
  });
  finish_band(stack.lowpass, dim, n);
  return stack;
}

namespace {

double parseval_deviation(const std::vector<Subband>& bands, const Subband& lowpass, int dim,
                          int n) {
  const size_t total = GridFunction::total(dim, n);
  std::vector<double> acc(total, 0.0);
  auto add_band = [&](const Subband& band) {
    for (size_t k = 0; k < band.support.size(); ++k)
      acc[band.support[k]] += band.values[k] * band.values[k];
  };
  for (const auto& band : bands) add_band(band);
  add_band(lowpass);
  double dev = 0.0;
  for (double v : acc) dev = std::max(dev, std::fabs(v - 1.0));
  return dev;
}

}  // namespace

double verify_parseval(const Frame& frame) {
  return parseval_deviation(frame.bands, frame.lowpass, frame.dim(), frame.n());
}

double verify_parseval(const DyadicStack& stack) {
  return parseval_deviation(stack.bands, stack.lowpass, stack.dim, stack.n);
}

int overlap_count(const Frame& frame, size_t band_index) {
  const Subband& b = frame.bands.at(band_index);
  const int d = frame.dim();
  if (b.support.empty()) return 0;
  // support max-norm radius range: sigma [2^{2j-4}, 2^{2j-1}], capped to Nyquist
  auto radial = [&](const Subband& s) {
    const double lo = std::ldexp(static_cast<double>(s.sigma), 2 * s.scale - 4);
    const double hi =
        s.capped ? frame.n() / 2.0 : std::ldexp(static_cast<double>(s.sigma), 2 * s.scale - 1);
    return std::pair<double, double>(lo, hi);
  };
  const auto rb = radial(b);
  int count = 0;
  for (size_t i = 0; i < frame.bands.size(); ++i) {
    if (i == band_index) continue;
    const Subband& o = frame.bands[i];
    if (o.cone != b.cone || o.support.empty()) continue;
    const auto ro = radial(o);
    if (rb.first > ro.second || ro.first > rb.second) continue;
    bool disjoint = false;
    for (int a = 0; a < d; ++a)
      if (std::max(b.box.lo[a], o.box.lo[a]) > std::min(b.box.hi[a], o.box.hi[a]))
        disjoint = true;
    if (disjoint) continue;
    // sorted-support intersection
    const auto& small = b.support.size() <= o.support.size() ? b : o;
    const auto& large = b.support.size() <= o.support.size() ? o : b;
    bool hit = false;
    size_t lo_pos = 0;
    for (uint32_t f : small.support) {
      while (lo_pos < large.support.size() && large.support[lo_pos] < f) ++lo_pos;
      if (lo_pos == large.support.size()) break;
      if (large.support[lo_pos] == f) {
        hit = true;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

double atom_spatial_profile(const Frame& frame, size_t band_index, double decay_order) {
  const Subband& band = frame.bands.at(band_index);
  const int d = frame.dim(), n = frame.n();
  const size_t total = GridFunction::total(d, n);
  std::vector<cplx> spec(total, cplx(0.0, 0.0));
  for (size_t k = 0; k < band.support.size(); ++k) spec[band.support[k]] = band.values[k];
  const auto psi = idft(d, n, spec);
  double peak = 0.0;
  for (const auto& v : psi) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;

  double best = 0.0;
  std::vector<int> idx(d, 0);
  std::vector<double> x(d);
  for (size_t i = 0; i < total; ++i) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const double c = static_cast<double>(signed_freq(idx[a], n)) / n;  // min-image coordinate
      x[a] = c;
      r2 += c * c;
    }
    if (r2 <= 0.0625) {
      const auto y = apply_BA(band.cone, band.scale, band.shear, x);
      double yn = 0.0;
      for (double c : y) yn += c * c;
      const double w = std::pow(1.0 + frame.sigma() * std::sqrt(yn), decay_order);
      best = std::max(best, std::abs(psi[i]) * w);
    }
    int a = d - 1;
    while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
  }
  return best / peak;
}

std::vector<double> node_position(const Subband& band, int dim, const std::vector<int>& idx) {
  std::vector<double> x(dim);
  if (band.kind != BandKind::ShearAtom) {
    for (int a = 0; a < dim; ++a) x[a] = static_cast<double>(idx[a]) / band.counts[a];
    return x;
  }
  const auto axes = other_axes(band.cone, dim);
  int64_t denom = 1;
  for (int a = 0; a < dim; ++a) denom = std::max<int64_t>(denom, band.oversample[a]);
  int64_t num = 0;
  double s = 0.0;
  for (int i = 0; i < dim - 1; ++i) {
    s += static_cast<double>(band.shear[i]) * idx[i + 1] / band.oversample[i + 1];
    num += band.shear[i] * idx[i + 1] * (denom / band.oversample[i + 1]);
  }
  const int64_t k1_start = ceil_div(num * band.oversample[0], denom);
  const double u1 = static_cast<double>(k1_start + idx[0]) / band.oversample[0];
  const double inv = std::ldexp(1.0 / band.sigma, -2 * band.scale);
  x[band.cone - 1] = (u1 - s) * inv;
  for (int i = 0; i < dim - 1; ++i)
    x[axes[i]] = static_cast<double>(idx[i + 1]) / band.counts[i + 1];
  return x;
}

void for_each_node(const Subband& band, int dim,
                   const std::function<void(int64_t, const double*)>& fn) {
  double x[4] = {0, 0, 0, 0};
  if (band.kind != BandKind::ShearAtom) {
    std::vector<int> idx(dim, 0);
    const int64_t nodes = band.node_count();
    for (int64_t i = 0; i < nodes; ++i) {
      for (int a = 0; a < dim; ++a) x[a] = static_cast<double>(idx[a]) / band.counts[a];
      fn(i, x);
      int a = dim - 1;
      while (a >= 0 && ++idx[a] == band.counts[a]) idx[a--] = 0;
    }
    return;
  }
  const auto axes = other_axes(band.cone, dim);
  int64_t denom = 1;
  for (int a = 0; a < dim; ++a) denom = std::max<int64_t>(denom, band.oversample[a]);
  const double inv = std::ldexp(1.0 / band.sigma, -2 * band.scale);
  const double step = inv / band.oversample[0];
  // storage order: direction 0 slowest, transverse odometer inside
  int64_t transverse = 1;
  for (int i = 1; i < dim; ++i) transverse *= band.counts[i];
  std::vector<int> tidx(dim - 1, 0);
  for (int64_t t = 0; t < transverse; ++t) {
    int64_t num = 0;
    double s = 0.0;
    for (int i = 0; i < dim - 1; ++i) {
      s += static_cast<double>(band.shear[i]) * tidx[i] / band.oversample[i + 1];
      num += band.shear[i] * tidx[i] * (denom / band.oversample[i + 1]);
      x[axes[i]] = static_cast<double>(tidx[i]) / band.counts[i + 1];
    }
    const int64_t k1_start = ceil_div(num * band.oversample[0], denom);
    double xc = (static_cast<double>(k1_start) / band.oversample[0] - s) * inv;
    for (int o1 = 0; o1 < band.counts[0]; ++o1) {
      x[band.cone - 1] = xc;
      fn(static_cast<int64_t>(o1) * transverse + t, x);
      xc += step;
    }
    int i = dim - 2;
    while (i >= 0 && ++tidx[i] == band.counts[i + 1]) tidx[i--] = 0;
  }
}

int64_t node_cell_of(const Subband& band, int dim, const std::vector<double>& x) {
  std::vector<int> idx(dim);
  if (band.kind != BandKind::ShearAtom) {
    for (int a = 0; a < dim; ++a) {
      int64_t k = static_cast<int64_t>(std::floor(x[a] * band.counts[a]));
      k %= band.counts[a];
      if (k < 0) k += band.counts[a];
      idx[a] = static_cast<int>(k);
    }
    return flat_node_index(band, idx);
  }
  const auto axes = other_axes(band.cone, dim);
  const double two_j = std::ldexp(1.0, band.scale);
  const double four_j = std::ldexp(1.0, 2 * band.scale);
  double u1 = band.sigma * four_j * x[band.cone - 1];
  int64_t denom = 1;
  for (int a = 0; a < dim; ++a) denom = std::max<int64_t>(denom, band.oversample[a]);
  int64_t num = 0;
  for (int i = 0; i < dim - 1; ++i) {
    const double u = band.sigma * two_j * x[axes[i]];
    u1 += static_cast<double>(band.shear[i]) * u;
    int64_t k = static_cast<int64_t>(std::floor(u * band.oversample[i + 1]));
    const int64_t reduced = ((k % band.counts[i + 1]) + band.counts[i + 1]) % band.counts[i + 1];
    // Wrapping the transverse index by a torus period shifts the cone axis
    // coordinate by sigma 2^j l_i lattice steps.
    const int64_t wraps = (k - reduced) / band.counts[i + 1];
    u1 -= static_cast<double>(wraps) * band.shear[i] *
          (static_cast<double>(band.counts[i + 1]) / band.oversample[i + 1]);
    idx[i + 1] = static_cast<int>(reduced);
    num += band.shear[i] * reduced * (denom / band.oversample[i + 1]);
  }
  const int64_t k1_start = ceil_div(num * band.oversample[0], denom);
  const int64_t k1 = static_cast<int64_t>(std::floor(u1 * band.oversample[0]));
  int64_t o1 = (k1 - k1_start) % band.counts[0];
  if (o1 < 0) o1 += band.counts[0];
  idx[0] = static_cast<int>(o1);
  return flat_node_index(band, idx);
}

int64_t flat_node_index(const Subband& band, const std::vector<int>& idx) {
  // direction 0 is the slowest storage axis
  int64_t f = idx[0];
  for (size_t a = 1; a < idx.size(); ++a) f = f * band.counts[a] + idx[a];
  return f;
}

}  // namespace slt
