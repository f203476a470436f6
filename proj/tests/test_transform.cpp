// SPDX-License-Identifier: Apache-2.0
#include "test_main.hpp"

#include <cmath>
#include <random>

#include "core/io.hpp"
#include "core/transform.hpp"

using namespace slt;

namespace {

Frame make(int dim, int n, int j_max, FrameVariant variant) {
  FrameSpec spec;
  spec.dim = dim;
  spec.n = n;
  spec.j_max = j_max;
  spec.variant = variant;
  return build_frame(spec);
}

size_t find_band(const Frame& f, int cone, int scale, const std::vector<int64_t>& shear) {
  for (size_t b = 0; b < f.bands.size(); ++b) {
    const auto& band = f.bands[b];
    if (band.cone == cone && band.scale == scale && band.shear == shear) return b;
  }
  REQUIRE(false);
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("forward of zero and of a single atom") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  GridFunction zero(2, 64);
  const auto field0 = forward_grid(f, zero);
  CHECK(field_energy(f, field0) == 0.0);

  const size_t b = find_band(f, 1, 1, {0});
  // f = inverse DFT of the band mask
  std::vector<cplx> spec(GridFunction::total(2, 64), cplx(0.0, 0.0));
  double mask4 = 0.0;
  for_each_freq(f.bands[b].box.lo, f.bands[b].box.hi, 64, [&](const std::vector<int>& xi) {
    const double v = f.bands[b].mask_at(xi);
    if (v == 0.0) return;
    std::vector<int> st{storage_freq(xi[0], 64), storage_freq(xi[1], 64)};
    spec[flat_index(st, 64)] = v;
    mask4 += v * v * v * v;
  });
  const GridFunction g = GridFunction::from_spectrum(2, 64, spec);
  const auto field = forward_grid(f, g);
  const GridFunction c = band_field(f, field, b);
  // global max at x = 0
  double peak = 0.0;
  size_t arg = 0;
  for (size_t i = 0; i < c.size(); ++i)
    if (std::abs(c.samples[i]) > peak) {
      peak = std::abs(c.samples[i]);
      arg = i;
    }
  CHECK(arg == 0);
  // band energy equals sum of mask^4 (frequency-domain oracle)
  double energy = 0.0;
  for (const auto& v : field.band_spec[b]) energy += std::norm(v);
  CHECK(energy == doctest::Approx(mask4).epsilon(1e-12));
}

TEST_CASE("energy identity and round trip") {
  for (FrameVariant variant : {FrameVariant::Smooth, FrameVariant::ConeProjected}) {
    const Frame f = make(2, 64, 2, variant);
    for (int trial = 0; trial < 5; ++trial) {
      const GridFunction g = random_real_signal(2, 64, 100 + trial);
      const auto field = forward_grid(f, g);
      const double e = field_energy(f, field);
      const double n2 = l2_norm(g);
      CHECK(std::fabs(e - n2 * n2) <= 1e-10 * n2 * n2);
      const GridFunction back = inverse_grid(f, field);
      CHECK(rel_l2_error(back, g) <= 1e-10);
    }
  }
}

TEST_CASE("round trip in three dimensions on one cone") {
  const Frame f = make(3, 32, 1, FrameVariant::Smooth);
  // random band-limited signal supported in cone 1
  std::vector<cplx> spec(GridFunction::total(3, 32), cplx(0.0, 0.0));
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  std::vector<int> lo{2, -2, -2}, hi{7, 2, 2};
  for_each_freq(lo, hi, 32, [&](const std::vector<int>& xi) {
    std::vector<int> st{storage_freq(xi[0], 32), storage_freq(xi[1], 32),
                        storage_freq(xi[2], 32)};
    spec[flat_index(st, 32)] = cplx(gauss(rng), gauss(rng));
  });
  const GridFunction g = GridFunction::from_spectrum(3, 32, spec);
  const GridFunction back = inverse_grid(f, forward_grid(f, g));
  CHECK(rel_l2_error(back, g) <= 1e-10);
}

TEST_CASE("translation covariance of the band fields") {
  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  const GridFunction g = random_real_signal(2, 32, 9);
  GridFunction shifted(2, 32);
  const int s0 = 5, s1 = 11;
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c)
      shifted.samples[((r + s0) % 32) * 32 + (c + s1) % 32] =
          g.samples[static_cast<size_t>(r) * 32 + c];
  const size_t b = find_band(f, 1, 1, {1});
  const GridFunction cb = band_field(f, forward_grid(f, g), b);
  const GridFunction cb_shift = band_field(f, forward_grid(f, shifted), b);
  double err = 0.0;
  for (int r = 0; r < 32; ++r)
    for (int c = 0; c < 32; ++c)
      err = std::max(err, std::abs(cb_shift.samples[((r + s0) % 32) * 32 + (c + s1) % 32] -
                                   cb.samples[static_cast<size_t>(r) * 32 + c]));
  CHECK(err <= 1e-12);
}

TEST_CASE("subsample basics") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  GridFunction zero(2, 64);
  const auto seq0 = subsample(f, forward_grid(f, zero));
  for (const auto& block : seq0.values)
    for (const auto& v : block) CHECK(std::abs(v) == 0.0);

  // inner bands carry sigma^d 2^{(d+1)j} translations
  for (size_t b = 0; b < f.bands.size(); ++b) {
    const auto& band = f.bands[b];
    if (band.boundary || band.capped) continue;
    CHECK(band.node_count() == int64_t{16} << (3 * band.scale));
    for (int m : band.oversample) CHECK(m == 1);
  }

  // single smooth atom: its own coefficient dominates its band
  const size_t b = find_band(f, 1, 1, {0});
  SequenceCoefficients delta = subsample(f, forward_grid(f, zero));
  delta.values[b][0] = 1.0;
  const GridFunction atom = synthesize_sequence(f, delta);
  const auto coeffs = subsample(f, forward_grid(f, atom));
  double best = 0.0;
  size_t arg = 0;
  for (size_t i = 0; i < coeffs.values[b].size(); ++i)
    if (std::abs(coeffs.values[b][i]) > best) {
      best = std::abs(coeffs.values[b][i]);
      arg = i;
    }
  CHECK(arg == 0);
}

TEST_CASE("synthesis of a delta sequence reproduces the atom") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  const size_t b = find_band(f, 1, 1, {-1});
  SequenceCoefficients seq = subsample(f, forward_grid(f, GridFunction(2, 64)));
  seq.values[b][0] = 1.0;
  const GridFunction atom = synthesize_sequence(f, seq);
  // direct spectrum: sqrt(covol) mask (node 0 sits at the origin)
  std::vector<cplx> spec(GridFunction::total(2, 64), cplx(0.0, 0.0));
  const double w = std::sqrt(f.bands[b].covol);
  for_each_freq(f.bands[b].box.lo, f.bands[b].box.hi, 64, [&](const std::vector<int>& xi) {
    const double v = f.bands[b].mask_at(xi);
    if (v == 0.0) return;
    std::vector<int> st{storage_freq(xi[0], 64), storage_freq(xi[1], 64)};
    spec[flat_index(st, 64)] = w * v;
  });
  const GridFunction direct = GridFunction::from_spectrum(2, 64, spec);
  CHECK(rel_l2_error(atom, direct) <= 1e-10);

  // linearity
  SequenceCoefficients seq2 = seq;
  seq2.values[b][5] = cplx(0.0, 2.0);
  GridFunction sum = synthesize_sequence(f, seq2);
  GridFunction parts = synthesize_sequence(f, seq);
  SequenceCoefficients only2 = seq;
  only2.values[b][0] = 0.0;
  only2.values[b][5] = cplx(0.0, 2.0);
  const GridFunction part2 = synthesize_sequence(f, only2);
  for (size_t i = 0; i < sum.size(); ++i)
    parts.samples[i] += part2.samples[i];
  CHECK(rel_l2_error(sum, parts) <= 1e-13);
}

TEST_CASE("sequence-level round trip at compatible grid size") {
  for (FrameVariant variant : {FrameVariant::Smooth, FrameVariant::ConeProjected}) {
    const Frame f = make(2, 64, 2, variant);  // n = sigma 4^{j_max}
    const GridFunction g = random_bandlimited_signal(2, 64, 21);
    const auto seq = subsample(f, forward_grid(f, g));
    const GridFunction back = synthesize_sequence(f, seq);
    CHECK(rel_l2_error(back, g) <= 1e-6);
  }
}

TEST_CASE("coefficients vanish across scale gaps >= 2") {
  const Frame f = make(2, 256, 3, FrameVariant::Smooth);
  const size_t b = find_band(f, 1, 3, {0});
  SequenceCoefficients seq = subsample(f, forward_grid(f, GridFunction(2, 256)));
  seq.values[b][0] = 1.0;
  const GridFunction atom = synthesize_sequence(f, seq);
  const auto coeffs = subsample(f, forward_grid(f, atom));
  double peak = 0.0;
  for (const auto& v : coeffs.values[b]) peak = std::max(peak, std::abs(v));
  for (size_t o = 0; o < f.bands.size(); ++o) {
    if (std::abs(f.bands[o].scale - 3) < 2) continue;
    // disjoint spectra: only FFT round-off can leak across the gap
    for (const auto& v : coeffs.values[o]) CHECK(std::abs(v) <= 1e-13 * peak);
  }
}

TEST_CASE("dyadic stack round trip and band limits") {
  const DyadicStack stack = build_dyadic_stack(2, 64);
  GridFunction zero(2, 64);
  const auto field0 = forward_grid(stack, zero);
  for (const auto& spec : field0.band_spec)
    for (const auto& v : spec) CHECK(std::abs(v) == 0.0);

  const GridFunction g = random_real_signal(2, 64, 77);
  const auto field = forward_grid(stack, g);
  const GridFunction back = inverse_grid(stack, field);
  CHECK(rel_l2_error(back, g) <= 1e-10);

  for (const auto& band : stack.bands) {
    if (band.capped || band.box.empty) continue;
    for (int a = 0; a < 2; ++a) {
      CHECK(band.box.hi[a] <= 2 << band.scale);
      CHECK(-band.box.lo[a] <= 2 << band.scale);
    }
  }
}

TEST_CASE("inverse of an all-zero field is the zero function") {
  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  const auto field0 = forward_grid(f, GridFunction(2, 32));
  const GridFunction zero = inverse_grid(f, field0);
  for (const auto& v : zero.samples) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("window bank config serializes and restores") {
  const slt::WindowBank bank(5);
  const std::string cfg = window_bank_config(bank);
  CHECK(cfg.find("meyer_degree") != std::string::npos);
  const slt::WindowBank back = window_bank_from_config(cfg);
  CHECK(back.meyer_degree() == 5);
  CHECK(back.psi1(0.2) == bank.psi1(0.2));
}

TEST_CASE("signal and frame files round trip") {
  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  const GridFunction g = random_real_signal(2, 32, 3);
  write_signal(g, "/tmp/slt_sig.bin");
  const GridFunction r = read_signal("/tmp/slt_sig.bin");
  CHECK(rel_l2_error(r, g) == 0.0);
  write_signal_csv(g, "/tmp/slt_sig.csv");
  const GridFunction rc = read_signal_csv("/tmp/slt_sig.csv");
  CHECK(rel_l2_error(rc, g) <= 1e-15);

  write_frame(f, "/tmp/slt_frame.bin");
  const Frame f2 = read_frame("/tmp/slt_frame.bin");
  CHECK(f2.bands.size() == f.bands.size());
  CHECK(verify_parseval(f2) <= 1e-10);
  const auto field = forward_grid(f, g);
  write_coefficients(f, field, "/tmp/slt_coef.bin");
  const auto field2 = read_coefficients(f2, "/tmp/slt_coef.bin");
  const GridFunction back = inverse_grid(f2, field2);
  CHECK(rel_l2_error(back, g) <= 1e-10);
}
