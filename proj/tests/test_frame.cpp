// SPDX-License-Identifier: Apache-2.0
#include "test_main.hpp"

#include <cmath>
#include <set>

#include "core/frame.hpp"

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

}  // namespace

TEST_CASE("band enumeration counts") {
  const Frame cp = make(2, 256, 3, FrameVariant::ConeProjected);
  CHECK(cp.bands.size() + 1 == 69);  // 2 (3+5+9+17) + 1
  const Frame sm = make(2, 256, 3, FrameVariant::Smooth);
  CHECK(sm.bands.size() + 1 == 61);  // boundary atoms merged pairwise across cones
  CHECK(FrameSpec::default_j_max(256) == 3);
  CHECK(FrameSpec::default_j_max(64) == 2);

  FrameSpec bad;
  bad.dim = 2;
  bad.n = 16;
  bad.j_max = 4;
  CHECK_THROWS(build_frame(bad));
  FrameSpec odd;
  odd.n = 100;
  CHECK_THROWS(build_frame(odd));
}

TEST_CASE("parseval partition of unity on the grid") {
  for (FrameVariant v : {FrameVariant::ConeProjected, FrameVariant::Smooth}) {
    const Frame f2 = make(2, 64, 2, v);
    CHECK(verify_parseval(f2) <= 1e-10);
    const Frame f3 = make(3, 32, 1, v);
    CHECK(verify_parseval(f3) <= 1e-10);
  }
  CHECK(verify_parseval(build_dyadic_stack(2, 64)) <= 1e-10);
}

TEST_CASE("lowpass and zero-frequency bin") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  CHECK(f.lowpass.mask_at({0, 0}) == 1.0);
  for (const auto& band : f.bands) CHECK(band.mask_at({0, 0}) == 0.0);
}

TEST_CASE("inner atom support boxes") {
  const Frame f = make(2, 256, 3, FrameVariant::Smooth);
  for (const auto& band : f.bands) {
    if (band.capped || band.boundary || band.box.empty) continue;
    const int axis = band.cone - 1;
    const int64_t hi = int64_t{f.sigma()} << (2 * band.scale + 1);
    CHECK(std::abs(band.box.lo[axis]) <= hi);
    CHECK(std::abs(band.box.hi[axis]) <= hi);
    // other axes never exceed the cone axis extent
    for (int a = 0; a < 2; ++a) {
      CHECK(band.box.hi[a] <= hi);
      CHECK(-band.box.lo[a] <= hi);
    }
  }
}

TEST_CASE("overlap bound and cross-scale structure") {
  const Frame f = make(2, 256, 3, FrameVariant::ConeProjected);
  size_t inner_j2 = SIZE_MAX;
  for (size_t b = 0; b < f.bands.size(); ++b) {
    const auto& band = f.bands[b];
    CHECK(overlap_count(f, b) <= 11);
    if (band.scale == 2 && band.cone == 1 && band.shear == std::vector<int64_t>{0})
      inner_j2 = b;
  }
  REQUIRE(inner_j2 != SIZE_MAX);

  // same-scale neighbors of an inner band: exactly 2
  int same_scale = 0;
  for (size_t b = 0; b < f.bands.size(); ++b) {
    if (b == inner_j2) continue;
    const auto& o = f.bands[b];
    if (o.cone != 1 || o.scale != 2 || o.box.empty) continue;
    std::vector<int> lo(2), hi(2);
    bool disjoint = false;
    for (int a = 0; a < 2; ++a) {
      lo[a] = std::max(o.box.lo[a], f.bands[inner_j2].box.lo[a]);
      hi[a] = std::min(o.box.hi[a], f.bands[inner_j2].box.hi[a]);
      if (lo[a] > hi[a]) disjoint = true;
    }
    if (disjoint) continue;
    bool hit = false;
    for_each_freq(lo, hi, 256, [&](const std::vector<int>& xi) {
      if (!hit && o.mask_at(xi) != 0.0 && f.bands[inner_j2].mask_at(xi) != 0.0) hit = true;
    });
    if (hit) ++same_scale;
  }
  CHECK(same_scale == 2);

  // scale j overlaps only scales j-1, j, j+1
  for (size_t b = 0; b < f.bands.size(); ++b) {
    for (size_t o = 0; o < f.bands.size(); ++o) {
      if (b == o || f.bands[b].cone != f.bands[o].cone) continue;
      if (f.bands[b].box.empty || f.bands[o].box.empty) continue;
      if (std::abs(f.bands[b].scale - f.bands[o].scale) <= 1) continue;
      std::vector<int> lo(2), hi(2);
      bool disjoint = false;
      for (int a = 0; a < 2; ++a) {
        lo[a] = std::max(f.bands[b].box.lo[a], f.bands[o].box.lo[a]);
        hi[a] = std::min(f.bands[b].box.hi[a], f.bands[o].box.hi[a]);
        if (lo[a] > hi[a]) disjoint = true;
      }
      if (disjoint) continue;
      bool hit = false;
      for_each_freq(lo, hi, 256, [&](const std::vector<int>& xi) {
        if (!hit && f.bands[b].mask_at(xi) != 0.0 && f.bands[o].mask_at(xi) != 0.0) hit = true;
      });
      CHECK_FALSE(hit);
    }
  }

  const Frame f3 = make(3, 32, 1, FrameVariant::ConeProjected);
  for (size_t b = 0; b < f3.bands.size(); ++b) CHECK(overlap_count(f3, b) <= 49);
}

TEST_CASE("smooth variant glues boundary atoms across cones") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  int boundary = 0;
  for (const auto& band : f.bands) {
    if (!band.boundary) continue;
    ++boundary;
    CHECK(band.aliases.size() == 2);
    std::set<int> cones;
    for (const auto& [cone, shear] : band.aliases) cones.insert(cone);
    CHECK(cones.size() == 2);
  }
  CHECK(boundary == 2 * 3);  // two seams per scale, scales 0..2
}

TEST_CASE("atom spatial decay profile") {
  const Frame f = make(2, 128, 2, FrameVariant::Smooth);
  size_t b1 = SIZE_MAX, b2 = SIZE_MAX;
  for (size_t b = 0; b < f.bands.size(); ++b) {
    const auto& band = f.bands[b];
    if (band.cone == 1 && band.shear == std::vector<int64_t>{0}) {
      if (band.scale == 1) b1 = b;
      if (band.scale == 2) b2 = b;
    }
  }
  REQUIRE(b1 != SIZE_MAX);
  REQUIRE(b2 != SIZE_MAX);
  CHECK(atom_spatial_profile(f, b1, 0.0) == doctest::Approx(1.0));
  const double c3 = atom_spatial_profile(f, b1, 3.0);
  const double c2 = atom_spatial_profile(f, b1, 2.0);
  CHECK(c2 <= c3 * (1.0 + 1e-12));
  const double cj1 = atom_spatial_profile(f, b1, 3.0);
  const double cj2 = atom_spatial_profile(f, b2, 3.0);
  CHECK(cj2 <= 4.0 * cj1);
  CHECK(std::isfinite(cj2));
}

TEST_CASE("node lattice tiles the torus") {
  const Frame f = make(2, 64, 2, FrameVariant::Smooth);
  for (const auto& band : f.bands) {
    if (band.scale != 1) continue;
    // every node position lands in [0,1)^d and node_cell_of inverts it
    std::vector<int> idx(2, 0);
    const int64_t nodes = band.node_count();
    int64_t visited = 0;
    for (int64_t i = 0; i < nodes; ++i) {
      const auto x = node_position(band, 2, idx);
      for (double c : x) {
        CHECK(c >= -1e-12);
        CHECK(c < 1.0 + 1e-12);
      }
      CHECK(node_cell_of(band, 2, x) == flat_node_index(band, idx));
      ++visited;
      int a = 1;
      while (a >= 0 && ++idx[a] == band.counts[a]) idx[a--] = 0;
    }
    CHECK(visited == nodes);
  }
}
