// SPDX-License-Identifier: Apache-2.0
#include "core/windows.hpp"

#include <cmath>

namespace slt {

namespace {
constexpr double kPiHalf = 1.57079632679489661923;
}

double meyer_aux(double t, int degree) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double t2 = t * t;
  switch (degree) {
    case 3:
      return t2 * (3.0 - 2.0 * t);
    case 5:
      return t2 * t * (10.0 + t * (-15.0 + 6.0 * t));
    case 7:
      return t2 * t2 * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
    case 9:
      return t2 * t2 * t * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + 70.0 * t))));
    default:
      throw std::invalid_argument("meyer_aux: degree must be one of {3,5,7,9}");
  }
}

WindowBank::WindowBank(int meyer_degree) : degree_(meyer_degree) {
  if (meyer_degree < 3) throw std::invalid_argument("WindowBank: meyer_degree must be >= 3");
  meyer_aux(0.5, meyer_degree);  // validates the degree
}

double WindowBank::psi1(double omega) const {
  const double w = std::fabs(omega);
  if (w <= 1.0 / 16.0 || w >= 0.5) return 0.0;
  if (w < 0.125) return std::sin(kPiHalf * ramp(16.0 * w - 1.0));
  if (w <= 0.25) return 1.0;
  // Falling edge paired with the rising edge of the next coarser dilate,
  // so psi1(w)^2 + psi1(w/4)^2 = 1 on [1/4,1/2].
  return std::cos(kPiHalf * ramp(4.0 * w - 1.0));
}

double WindowBank::psi1_capped(double omega) const {
  const double w = std::fabs(omega);
  if (w <= 1.0 / 16.0) return 0.0;
  if (w < 0.125) return std::sin(kPiHalf * ramp(16.0 * w - 1.0));
  return 1.0;
}

double WindowBank::psi2(double omega) const {
  const double w = std::fabs(omega);
  if (w >= 1.0) return 0.0;
  return std::cos(kPiHalf * ramp(w));
}

double WindowBank::phi_smooth(double u) const {
  const double w = std::fabs(u);
  if (w <= 1.0 / 16.0) return 1.0;
  if (w >= 0.125) return 0.0;
  return std::cos(kPiHalf * ramp(16.0 * w - 1.0));
}

double WindowBank::big_phi_smooth(std::span<const double> xi) const {
  double p = 1.0;
  for (double c : xi) {
    p *= phi_smooth(c);
    if (p == 0.0) return 0.0;
  }
  return p;
}

double WindowBank::w_corona(std::span<const double> xi) const {
  double outer = 1.0, inner = 1.0;
  for (double c : xi) {
    outer *= phi_smooth(0.25 * c);
    inner *= phi_smooth(c);
  }
  const double r2 = outer * outer - inner * inner;
  if (r2 < -1e-14) throw std::runtime_error("w_corona: negative radicand, window construction bug");
  return r2 > 0.0 ? std::sqrt(r2) : 0.0;
}

double WindowBank::w_corona_capped(std::span<const double> xi) const {
  double inner = 1.0;
  for (double c : xi) inner *= phi_smooth(c);
  const double r2 = 1.0 - inner * inner;
  if (r2 < -1e-14) throw std::runtime_error("w_corona_capped: negative radicand");
  return r2 > 0.0 ? std::sqrt(r2) : 0.0;
}

double WindowBank::phi_dyadic_radial(double r) const {
  const double w = std::fabs(r);
  if (w <= 0.5 || w >= 2.0) return 0.0;
  if (w < 1.0) return std::sin(kPiHalf * ramp(2.0 * w - 1.0));
  return std::cos(kPiHalf * ramp(w - 1.0));
}

double WindowBank::big_phi_dyadic_radial(double r) const {
  const double w = std::fabs(r);
  if (w <= 0.5) return 1.0;
  if (w >= 1.0) return 0.0;
  return std::cos(kPiHalf * ramp(2.0 * w - 1.0));
}

double WindowBank::phi_dyadic_capped_radial(double r) const {
  const double w = std::fabs(r);
  if (w <= 0.5) return 0.0;
  if (w >= 1.0) return 1.0;
  return std::sin(kPiHalf * ramp(2.0 * w - 1.0));
}

double WindowBank::big_psi(std::span<const double> xi) const {
  double p = 1.0;
  for (double c : xi) {
    const double w = std::fabs(c);
    if (w >= 0.25) return 0.0;
    if (w > 0.125) p *= std::cos(kPiHalf * ramp(8.0 * w - 1.0));
  }
  return p;
}

LowpassVariant lowpass_variant_from_string(const std::string& name) {
  if (name == "shear_global") return LowpassVariant::ShearGlobal;
  if (name == "dyadic") return LowpassVariant::Dyadic;
  if (name == "smooth") return LowpassVariant::Smooth;
  throw std::invalid_argument("unknown lowpass variant: " + name);
}

double WindowBank::eval_lowpass(LowpassVariant variant, std::span<const double> xi) const {
  for (double c : xi) {
    if (!std::isfinite(c)) throw std::invalid_argument("eval_lowpass: non-finite frequency");
  }
  switch (variant) {
    case LowpassVariant::ShearGlobal:
      return big_psi(xi);
    case LowpassVariant::Dyadic: {
      double r2 = 0.0;
      for (double c : xi) r2 += c * c;
      return big_phi_dyadic_radial(std::sqrt(r2));
    }
    case LowpassVariant::Smooth:
      return big_phi_smooth(xi);
  }
  throw std::invalid_argument("eval_lowpass: unknown variant");
}

}  // namespace slt
