// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slt {

// Polynomial smoothstep ramp: nu(t) = 0 for t <= 0, 1 for t >= 1, and
// nu(t) + nu(1-t) = 1.  The degree controls how many derivatives vanish
// at the endpoints (degree 7 is C^3).
double meyer_aux(double t, int degree = 7);

enum class LowpassVariant { ShearGlobal, Dyadic, Smooth };

LowpassVariant lowpass_variant_from_string(const std::string& name);

// All 1-D spectral profiles and low-pass windows used by the frame
// constructions.  Every window takes values in [0,1]; the partition
// identities they satisfy are exact up to rounding:
//   sum_j psi1(4^-j w)^2 = 1            for |w| >= 1/8
//   psi2(w-1)^2 + psi2(w)^2 + psi2(w+1)^2 = 1   for |w| <= 1
//   sum_m v(2^j u - m)^2 = 1            for |u| <= 1
//   PhiSm(x)^2 + sum_j W(4^-j x)^2 = 1  everywhere
//   PhiDy(x)^2 + sum_v phiDy(2^-v x)^2 = 1  everywhere
class WindowBank {
 public:
  explicit WindowBank(int meyer_degree = 7);

  int meyer_degree() const { return degree_; }

  // Band window on the cone axis; even, supported on [-1/2,-1/16] u [1/16,1/2].
  double psi1(double omega) const;
  // Rising part of psi1 continued by 1: sum_{j>=J} psi1(4^-j w)^2 for |w|>=1/8.
  // Used to close the radial partition at the top scale of a finite grid.
  double psi1_capped(double omega) const;
  // Shear window, supported on [-1,1]; the three-term identity is exact.
  double psi2(double omega) const;
  // Smooth bump with v(0)=1, flat at 0, supported on [-1,1].
  double v(double u) const { return psi2(u); }

  // Univariate Meyer scaling profile: 1 on [-1/16,1/16], 0 outside [-1/8,1/8].
  double phi_smooth(double u) const;
  // Product scaling window Phi(x) = prod phi_smooth(x_i).
  double big_phi_smooth(std::span<const double> xi) const;
  // Corona window, W^2(x) = Phi^2(x/4) - Phi^2(x).
  double w_corona(std::span<const double> xi) const;
  // Tail of the corona telescoping: sqrt(1 - Phi^2(x)).
  double w_corona_capped(std::span<const double> xi) const;

  // Classical radial dyadic pair: supp phi in {1/2<=|x|<=2}, supp Phi in {|x|<=1}.
  double phi_dyadic_radial(double r) const;
  double big_phi_dyadic_radial(double r) const;
  double phi_dyadic_capped_radial(double r) const;

  // Separable low-pass for the cone-projected frame: 1 on [-1/8,1/8]^d,
  // 0 outside [-1/4,1/4]^d.
  double big_psi(std::span<const double> xi) const;

  double eval_lowpass(LowpassVariant variant, std::span<const double> xi) const;

 private:
  double ramp(double t) const { return meyer_aux(t, degree_); }
  int degree_;
};

}  // namespace slt
