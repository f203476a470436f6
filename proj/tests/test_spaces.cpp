// SPDX-License-Identifier: Apache-2.0
#include "test_main.hpp"

#include <cmath>
#include <random>

#include "core/spaces.hpp"

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

// Direct-summation DFT oracle, independent of the FFT path.
std::vector<cplx> slow_spectrum(const GridFunction& g) {
  const int n = g.n;
  std::vector<cplx> out(g.size(), cplx(0.0, 0.0));
  for (int f0 = 0; f0 < n; ++f0)
    for (int f1 = 0; f1 < n; ++f1) {
      cplx acc(0.0, 0.0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const double ph = -2.0 * M_PI * (static_cast<double>(f0) * a + static_cast<double>(f1) * b) / n;
          acc += g.samples[static_cast<size_t>(a) * n + b] * cplx(std::cos(ph), std::sin(ph));
        }
      out[static_cast<size_t>(f0) * n + f1] = acc / static_cast<double>(n * n);
    }
  return out;
}

}  // namespace

TEST_CASE("besov distribution norm against a direct-summation oracle") {
  const Frame f = make(2, 16, 1, FrameVariant::Smooth);
  const GridFunction g = random_real_signal(2, 16, 5);
  SmoothnessParams prm{0.0, 2.0, 2.0};

  // Oracle: band L2 norms from the slow spectrum, term by term.
  const auto spec = slow_spectrum(g);
  double expected = 0.0;
  std::vector<double> terms;
  for (const auto& band : f.bands) {
    double e = 0.0;
    if (!band.box.empty) {
      for_each_freq(band.box.lo, band.box.hi, 16, [&](const std::vector<int>& xi) {
        const double v = band.mask_at(xi);
        if (v == 0.0) return;
        std::vector<int> st{storage_freq(xi[0], 16), storage_freq(xi[1], 16)};
        e += v * v * std::norm(spec[flat_index(st, 16)]);
      });
    }
    terms.push_back(std::sqrt(e));
  }
  double sq = 0.0;
  for (double t : terms) sq += t * t;
  double low = 0.0;
  for_each_freq(f.lowpass.box.lo, f.lowpass.box.hi, 16, [&](const std::vector<int>& xi) {
    const double v = f.lowpass.mask_at(xi);
    if (v == 0.0) return;
    std::vector<int> st{storage_freq(xi[0], 16), storage_freq(xi[1], 16)};
    low += v * v * std::norm(spec[flat_index(st, 16)]);
  });
  expected = std::sqrt(low) + std::sqrt(sq);
  CHECK(besov_ab_norm(f, g, prm) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("norm basics: zero input, homogeneity, p=q collapse") {
  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  GridFunction zero(2, 32);
  SmoothnessParams prm{0.3, 2.0, 2.0};
  CHECK(besov_ab_norm(f, zero, prm) == 0.0);
  CHECK(tl_ab_norm(f, zero, prm) == 0.0);

  const GridFunction g = random_real_signal(2, 32, 6);
  GridFunction scaled = g;
  for (auto& v : scaled.samples) v *= -2.5;
  CHECK(besov_ab_norm(f, scaled, prm) ==
        doctest::Approx(2.5 * besov_ab_norm(f, g, prm)).epsilon(1e-12));

  for (double p : {1.5, 2.0, 3.0}) {
    SmoothnessParams pq{0.1, p, p};
    CHECK(tl_ab_norm(f, g, pq) == doctest::Approx(besov_ab_norm(f, g, pq)).epsilon(1e-12));
  }

  SmoothnessParams pinf{0.0, std::numeric_limits<double>::infinity(), 2.0};
  CHECK(besov_ab_norm(f, g, pinf) > 0.0);
  CHECK_THROWS(tl_ab_norm(f, g, pinf));

  SmoothnessParams bad{0.0, -1.0, 2.0};
  CHECK_THROWS(besov_ab_norm(f, g, bad));
}

TEST_CASE("q-monotonicity and the B-F-B sandwich") {
  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  for (int trial = 0; trial < 5; ++trial) {
    const GridFunction g = random_bandlimited_signal(2, 32, 40 + trial);
    SmoothnessParams q1{0.2, 2.0, 1.0}, q2{0.2, 2.0, 2.0}, q4{0.2, 2.0, 4.0};
    const double b1 = besov_ab_norm(f, g, q1), b2 = besov_ab_norm(f, g, q2),
                 b4 = besov_ab_norm(f, g, q4);
    CHECK(b2 <= b1 * (1.0 + 1e-12));
    CHECK(b4 <= b2 * (1.0 + 1e-12));

    SmoothnessParams f4{0.2, 2.0, 4.0};
    const double tl = tl_ab_norm(f, g, f4);
    CHECK(tl <= b2 * (1.0 + 1e-12));   // B^{s,min(p,q)} into F^{s,q}
    CHECK(b4 <= tl * (1.0 + 1e-12));   // F^{s,q} into B^{s,max(p,q)}
  }
}

TEST_CASE("sequence-space delta normalizations are exact") {
  SequenceCoefficients seq = make_abstract_shear_sequence(2, 3);
  const int d = 2;
  for (int j : {0, 1, 2, 3}) {
    // locate band (cone 1, scale j, shear 0)
    size_t target = SIZE_MAX;
    for (size_t b = 0; b < seq.geometry.size(); ++b) {
      const auto& g = seq.geometry[b];
      if (g.cone == 1 && g.scale == j && g.shear == std::vector<int64_t>{0}) target = b;
    }
    REQUIRE(target != SIZE_MAX);
    SmoothnessParams prm{0.37, 1.7, 2.9};
    const double vol = seq.geometry[target].covol;
    SequenceCoefficients s = seq;
    s.values[target][0] =
        std::pow(vol, prm.alpha - d / (prm.p * (d + 1)) + 0.5);
    CHECK(besov_seq_norm(s, prm) == doctest::Approx(1.0).epsilon(1e-12));

    SequenceCoefficients t = seq;
    t.values[target][0] = std::pow(vol, prm.alpha - 1.0 / prm.p + 0.5);
    CHECK(tl_seq_norm(t, prm, 64) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(besov_seq_norm(seq, SmoothnessParams{0.0, 2.0, 2.0}) == 0.0);

  SequenceCoefficients dy = make_abstract_dyadic_sequence(2, 4);
  SmoothnessParams prm{-0.4, 2.5, 1.1};
  SequenceCoefficients s = dy;
  const double vol = dy.geometry[2].covol;
  s.values[2][0] = std::pow(vol, prm.alpha / d - 1.0 / prm.p + 0.5);
  CHECK(dyadic_besov_seq_norm(s, prm) == doctest::Approx(1.0).epsilon(1e-12));
  SequenceCoefficients t = dy;
  t.values[2][0] = std::pow(vol, prm.alpha / d - 1.0 / prm.p + 0.5);
  // b-norm with p=q equals f-norm on the same delta
  SmoothnessParams pq{prm.alpha, 2.5, 2.5};
  SequenceCoefficients u = dy;
  u.values[2][0] = std::pow(vol, prm.alpha / d - 1.0 / 2.5 + 0.5);
  CHECK(dyadic_besov_seq_norm(u, pq) ==
        doctest::Approx(dyadic_tl_seq_norm(u, pq, 64)).epsilon(1e-12));
}

TEST_CASE("maximal sequence envelope") {
  SequenceCoefficients seq = make_abstract_shear_sequence(2, 2);
  size_t target = SIZE_MAX;
  for (size_t b = 0; b < seq.geometry.size(); ++b) {
    const auto& g = seq.geometry[b];
    if (g.cone == 1 && g.scale == 2 && g.shear == std::vector<int64_t>{1}) target = b;
  }
  REQUIRE(target != SIZE_MAX);
  MaximalParams prm{2.0, 8.0, 1.0};
  CHECK_THROWS(maximal_sequence(seq, MaximalParams{-1.0, 8.0, 1.0}));

  SequenceCoefficients s = seq;
  s.values[target][0] = cplx(0.0, -3.0);
  const auto star = maximal_sequence(s, prm);
  CHECK(std::abs(star.values[target][0]) == doctest::Approx(3.0).epsilon(1e-13));
  // single nonzero at known distance: closed form |s| / (1 + 2^j delta)^{N/r}
  std::vector<int> idx{0, 1};  // one transverse step: delta x = 2^-j
  const auto xq = node_position(seq.geometry[target], 2, idx);
  double delta = std::hypot(xq[0], xq[1]);
  const double expect = 3.0 / std::pow(1.0 + 4.0 * delta, prm.n_decay / prm.r);
  CHECK(std::abs(star.values[target][flat_node_index(seq.geometry[target], idx)]) ==
        doctest::Approx(expect).epsilon(1e-12));

  // entrywise domination on a random sparse sequence
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<size_t> bpick(0, seq.values.size() - 1);
  std::normal_distribution<double> gauss;
  SequenceCoefficients r100 = seq;
  for (int i = 0; i < 100; ++i) {
    const size_t b = bpick(rng);
    if (r100.values[b].empty()) continue;
    std::uniform_int_distribution<size_t> npick(0, r100.values[b].size() - 1);
    r100.values[b][npick(rng)] += cplx(gauss(rng), gauss(rng));
  }
  const auto star100 = maximal_sequence(r100, prm);
  for (size_t b = 0; b < r100.values.size(); ++b)
    for (size_t i = 0; i < r100.values[b].size(); ++i)
      CHECK(std::abs(star100.values[b][i]) >= std::abs(r100.values[b][i]) * (1.0 - 1e-12));
}

TEST_CASE("maximal functions on the grid") {
  GridFunction ones(2, 32);
  for (auto& v : ones.samples) v = 1.0;
  const auto hl = hl_maximal(ones);
  for (double v : hl) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

  const Frame f = make(2, 32, 1, FrameVariant::Smooth);
  const size_t b = find_band(f, 1, 1, {0});
  const GridFunction g = random_bandlimited_signal(2, 32, 55);
  const GridFunction c = band_field(f, forward_grid(f, g), b);
  // large lambda pins the Peetre maximal function to |c| itself
  const auto pe = peetre_maximal(f, c, b, 20.0, 1);
  double worst = 0.0;
  for (size_t i = 0; i < c.size(); ++i)
    worst = std::max(worst, std::fabs(pe[i] - std::abs(c.samples[i])));
  double peak = 0.0;
  for (const auto& v : c.samples) peak = std::max(peak, std::abs(v));
  CHECK(worst <= 1e-6 * peak + 1e-14);
}
