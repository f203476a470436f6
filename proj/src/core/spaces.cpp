// SPDX-License-Identifier: Apache-2.0
#include "core/spaces.hpp"

#include <cmath>
#include <stdexcept>

#include "core/par.hpp"

namespace slt {

namespace {

bool finite(double p) { return !std::isinf(p); }

// pow for the common small integer exponents in the l^q aggregations
inline double powq(double v, double q) {
  if (q == 1.0) return v;
  if (q == 2.0) return v * v;
  if (q == 3.0) return v * v * v;
  if (q == 4.0) {
    const double s = v * v;
    return s * s;
  }
  return std::pow(v, q);
}

double lq_combine(const std::vector<double>& terms, double q) {
  if (!finite(q)) {
    double m = 0.0;
    for (double t : terms) m = std::max(m, t);
    return m;
  }
  double s = 0.0;
  for (double t : terms) s += std::pow(t, q);
  return std::pow(s, 1.0 / q);
}

// Quadrature L^p norm of a complex sample vector (weight N^-d).
double lp_norm_counting(const std::vector<cplx>& vals, int dim, int n, double p) {
  if (!finite(p)) {
    double m = 0.0;
    for (const auto& v : vals) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : vals) {
    const double a = std::abs(v);
    if (a > 0.0) s += std::pow(a, p);
  }
  return std::pow(s / static_cast<double>(GridFunction::total(dim, n)), 1.0 / p);
}

double lp_counting(const std::vector<cplx>& vals, double p, double weight) {
  if (!finite(p)) {
    double m = 0.0;
    for (const auto& v : vals) m = std::max(m, std::abs(v));
    return weight * m;
  }
  double s = 0.0;
  for (const auto& v : vals) {
    const double a = std::abs(v);
    if (a > 0.0) s += std::pow(a, p);
  }
  return weight * std::pow(s, 1.0 / p);
}

}  // namespace

void SmoothnessParams::validate(bool require_finite_p) const {
  if (!(p > 0.0)) throw std::invalid_argument("SmoothnessParams: p must be > 0");
  if (!(q > 0.0)) throw std::invalid_argument("SmoothnessParams: q must be > 0");
  if (require_finite_p && !finite(p))
    throw std::invalid_argument("SmoothnessParams: p = inf not admitted here");
  if (!std::isfinite(alpha)) throw std::invalid_argument("SmoothnessParams: alpha must be finite");
}

namespace {

// Scale weight |Q_j|^{-alpha} for shear bands, |Q_nu|^{-alpha/d} = 2^{nu alpha}
// for dyadic bands.
double scale_weight(const Subband& band, double alpha, int dim) {
  const double e = band.kind == BandKind::DyadicAtom ? alpha / dim : alpha;
  return std::pow(band.scale_volume, -e);
}

template <typename System>
double besov_distribution_impl(const System& sys, const std::vector<Subband>& bands,
                               const CoefficientField& field, const SmoothnessParams& prm) {
  prm.validate();
  std::vector<double> terms(bands.size(), 0.0);
  parallel_for(bands.size(), [&](size_t b) {
    const double w = scale_weight(bands[b], prm.alpha, field.dim);
    if (prm.p == 2.0) {
      // Plancherel: the band's L2 norm comes straight off its spectrum.
      double e = 0.0;
      for (const auto& v : field.band_spec[b]) e += std::norm(v);
      terms[b] = w * std::sqrt(e);
    } else {
      const auto& c = band_field_scratch(sys, field, b);
      terms[b] = w * lp_norm_counting(c, field.dim, field.n, prm.p);
    }
  });
  const GridFunction low = low_field(sys, field);
  return lp_norm(low, prm.p) + lq_combine(terms, prm.q);
}

template <typename System>
double tl_distribution_impl(const System& sys, const std::vector<Subband>& bands,
                            const CoefficientField& field, const SmoothnessParams& prm) {
  prm.validate(true);
  const size_t total = GridFunction::total(field.dim, field.n);
  std::vector<double> agg(total, 0.0);
  const bool qf = finite(prm.q);
  for (size_t b = 0; b < bands.size(); ++b) {
    const auto& c = band_field_scratch(sys, field, b);
    const double w = scale_weight(bands[b], prm.alpha, field.dim);
    for (size_t i = 0; i < total; ++i) {
      const double v = w * std::abs(c[i]);
      if (v == 0.0) continue;
      if (qf)
        agg[i] += powq(v, prm.q);
      else
        agg[i] = std::max(agg[i], v);
    }
  }
  if (qf)
    for (auto& v : agg) v = std::pow(v, 1.0 / prm.q);
  const GridFunction low = low_field(sys, field);
  return lp_norm(low, prm.p) + lp_norm(agg, field.dim, field.n, prm.p);
}

}  // namespace

double besov_ab_norm(const Frame& frame, const GridFunction& f, const SmoothnessParams& prm) {
  return besov_ab_norm(frame, forward_grid(frame, f), prm);
}

double besov_ab_norm(const Frame& frame, const CoefficientField& field,
                     const SmoothnessParams& prm) {
  return besov_distribution_impl(frame, frame.bands, field, prm);
}

double tl_ab_norm(const Frame& frame, const GridFunction& f, const SmoothnessParams& prm) {
  return tl_ab_norm(frame, forward_grid(frame, f), prm);
}

double tl_ab_norm(const Frame& frame, const CoefficientField& field, const SmoothnessParams& prm) {
  return tl_distribution_impl(frame, frame.bands, field, prm);
}

double dyadic_distribution_norm(const DyadicStack& stack, const GridFunction& f,
                                const SmoothnessParams& prm, bool triebel_lizorkin) {
  return dyadic_distribution_norm(stack, forward_grid(stack, f), prm, triebel_lizorkin);
}

double dyadic_distribution_norm(const DyadicStack& stack, const CoefficientField& field,
                                const SmoothnessParams& prm, bool triebel_lizorkin) {
  if (triebel_lizorkin) return tl_distribution_impl(stack, stack.bands, field, prm);
  return besov_distribution_impl(stack, stack.bands, field, prm);
}

namespace {

template <typename System>
std::vector<double> tl_multi_impl(const System& sys, const std::vector<Subband>& bands,
                                  const CoefficientField& field,
                                  const std::vector<SmoothnessParams>& prms) {
  for (const auto& prm : prms) prm.validate(true);
  const size_t total = GridFunction::total(field.dim, field.n);
  std::vector<std::vector<double>> agg(prms.size(), std::vector<double>(total, 0.0));
  for (size_t b = 0; b < bands.size(); ++b) {
    const auto& c = band_field_scratch(sys, field, b);
    for (size_t k = 0; k < prms.size(); ++k) {
      const double w = scale_weight(bands[b], prms[k].alpha, field.dim);
      const bool qf = finite(prms[k].q);
      auto& a = agg[k];
      for (size_t i = 0; i < total; ++i) {
        const double v = w * std::abs(c[i]);
        if (v == 0.0) continue;
        if (qf)
          a[i] += powq(v, prms[k].q);
        else
          a[i] = std::max(a[i], v);
      }
    }
  }
  const GridFunction low = low_field(sys, field);
  std::vector<double> out(prms.size(), 0.0);
  for (size_t k = 0; k < prms.size(); ++k) {
    if (finite(prms[k].q))
      for (auto& v : agg[k]) v = std::pow(v, 1.0 / prms[k].q);
    out[k] = lp_norm(low, prms[k].p) + lp_norm(agg[k], field.dim, field.n, prms[k].p);
  }
  return out;
}

}  // namespace

std::vector<double> tl_ab_norm_multi(const Frame& frame, const CoefficientField& field,
                                     const std::vector<SmoothnessParams>& prms) {
  return tl_multi_impl(frame, frame.bands, field, prms);
}

std::vector<double> dyadic_tl_norm_multi(const DyadicStack& stack, const CoefficientField& field,
                                         const std::vector<SmoothnessParams>& prms) {
  return tl_multi_impl(stack, stack.bands, field, prms);
}

double besov_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm) {
  prm.validate();
  const int d = seq.dim;
  std::vector<double> terms(seq.geometry.size(), 0.0);
  for (size_t b = 0; b < seq.geometry.size(); ++b) {
    const double q_vol = seq.geometry[b].covol;
    const double expnt =
        -prm.alpha + (finite(prm.p) ? d / (prm.p * (d + 1)) : 0.0) - 0.5;
    terms[b] = lp_counting(seq.values[b], prm.p, std::pow(q_vol, expnt));
  }
  const double low = lp_counting(seq.low_values, prm.p, 1.0);
  return low + lq_combine(terms, prm.q);
}

double dyadic_besov_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm) {
  prm.validate();
  const int d = seq.dim;
  std::vector<double> terms(seq.geometry.size(), 0.0);
  for (size_t b = 0; b < seq.geometry.size(); ++b) {
    const double q_vol = seq.geometry[b].covol;
    const double expnt = -prm.alpha / d + (finite(prm.p) ? 1.0 / prm.p : 0.0) - 0.5;
    terms[b] = lp_counting(seq.values[b], prm.p, std::pow(q_vol, expnt));
  }
  return lq_combine(terms, prm.q);
}

namespace {

double tl_seq_impl(const SequenceCoefficients& seq, const SmoothnessParams& prm, int quad_n,
                   bool dyadic_weights) {
  prm.validate(true);
  if (quad_n < 2) throw std::invalid_argument("tl_seq_norm: quadrature grid too small");
  const int d = seq.dim;
  const size_t total = GridFunction::total(d, quad_n);
  const bool qf = finite(prm.q);
  std::vector<double> agg(total, 0.0);
  std::vector<double> x(d);
  std::vector<int> idx(d, 0);
  for (size_t i = 0; i < total; ++i) {
    for (int a = 0; a < d; ++a) x[a] = static_cast<double>(idx[a]) / quad_n;
    for (size_t b = 0; b < seq.geometry.size(); ++b) {
      const Subband& g = seq.geometry[b];
      const double vol = g.covol;
      const double w = dyadic_weights ? std::pow(vol, -prm.alpha / d - 0.5)
                                      : std::pow(vol, -prm.alpha - 0.5);
      const int64_t cell = node_cell_of(g, d, x);
      const double s = std::abs(seq.values[b][static_cast<size_t>(cell)]);
      if (s == 0.0) continue;
      const double v = w * s;
      if (qf)
        agg[i] += powq(v, prm.q);
      else
        agg[i] = std::max(agg[i], v);
    }
    int a = d - 1;
    while (a >= 0 && ++idx[a] == quad_n) idx[a--] = 0;
  }
  if (qf)
    for (auto& v : agg) v = std::pow(v, 1.0 / prm.q);
  return lp_norm(agg, d, quad_n, prm.p);
}

}  // namespace

double tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm, int quad_n) {
  return tl_seq_impl(seq, prm, quad_n, false);
}

CellQuadrature make_cell_quadrature(const SequenceCoefficients& seq, int quad_n) {
  if (quad_n < 2) throw std::invalid_argument("make_cell_quadrature: grid too small");
  CellQuadrature quad;
  quad.quad_n = quad_n;
  const int d = seq.dim;
  const size_t total = GridFunction::total(d, quad_n);
  quad.cells.assign(seq.geometry.size(), {});
  parallel_for(seq.geometry.size(), [&](size_t b) {
    auto& cells = quad.cells[b];
    cells.resize(total);
    std::vector<int> idx(d, 0);
    std::vector<double> x(d);
    for (size_t i = 0; i < total; ++i) {
      for (int a = 0; a < d; ++a) x[a] = static_cast<double>(idx[a]) / quad_n;
      cells[i] = node_cell_of(seq.geometry[b], d, x);
      int a = d - 1;
      while (a >= 0 && ++idx[a] == quad_n) idx[a--] = 0;
    }
  });
  return quad;
}

double tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm,
                   const CellQuadrature& quad, bool dyadic_weights) {
  prm.validate(true);
  const int d = seq.dim;
  const size_t total = GridFunction::total(d, quad.quad_n);
  const bool qf = finite(prm.q);
  std::vector<double> agg(total, 0.0);
  for (size_t b = 0; b < seq.geometry.size(); ++b) {
    bool any = false;
    for (const auto& v : seq.values[b])
      if (v != cplx(0.0, 0.0)) {
        any = true;
        break;
      }
    if (!any) continue;
    const double vol = seq.geometry[b].covol;
    const double w = dyadic_weights ? std::pow(vol, -prm.alpha / d - 0.5)
                                    : std::pow(vol, -prm.alpha - 0.5);
    const auto& cells = quad.cells[b];
    for (size_t i = 0; i < total; ++i) {
      const double s = std::abs(seq.values[b][static_cast<size_t>(cells[i])]);
      if (s == 0.0) continue;
      const double v = w * s;
      if (qf)
        agg[i] += powq(v, prm.q);
      else
        agg[i] = std::max(agg[i], v);
    }
  }
  if (qf)
    for (auto& v : agg) v = std::pow(v, 1.0 / prm.q);
  return lp_norm(agg, d, quad.quad_n, prm.p);
}

double dyadic_tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm,
                          int quad_n) {
  return tl_seq_impl(seq, prm, quad_n, true);
}

namespace {

// Periodic sliding window sum of half-width h along one axis.
void sliding_sum_axis(std::vector<double>& data, int dim, int n, int axis, int h) {
  const size_t total = data.size();
  size_t stride = 1;
  for (int a = dim - 1; a > axis; --a) stride *= static_cast<size_t>(n);
  const size_t lines = total / static_cast<size_t>(n);
  std::vector<double> line(n), out(n);
  for (size_t ln = 0; ln < lines; ++ln) {
    // Base offset of this line: decompose ln into (outer, inner) parts.
    const size_t inner = ln % stride;
    const size_t outer = ln / stride;
    const size_t base = outer * stride * static_cast<size_t>(n) + inner;
    for (int i = 0; i < n; ++i) line[i] = data[base + static_cast<size_t>(i) * stride];
    double sum = 0.0;
    for (int t = -h; t <= h; ++t) sum += line[((t % n) + n) % n];
    for (int i = 0; i < n; ++i) {
      out[i] = sum;
      const int drop = ((i - h) % n + n) % n;
      const int add = ((i + h + 1) % n + n) % n;
      sum += line[add] - line[drop];
    }
    for (int i = 0; i < n; ++i) data[base + static_cast<size_t>(i) * stride] = out[i];
  }
}

}  // namespace

std::vector<double> hl_maximal(const GridFunction& g) {
  const int d = g.dim, n = g.n;
  const size_t total = g.size();
  std::vector<double> best(total);
  for (size_t i = 0; i < total; ++i) best[i] = std::abs(g.samples[i]);
  std::vector<double> abs0 = best;
  for (int h = 1; 2 * h + 1 < n; h *= 2) {
    std::vector<double> box = abs0;
    for (int a = 0; a < d; ++a) sliding_sum_axis(box, d, n, a, h);
    double cells = 1.0;
    for (int a = 0; a < d; ++a) cells *= (2.0 * h + 1.0);
    for (size_t i = 0; i < total; ++i) best[i] = std::max(best[i], box[i] / cells);
  }
  // radius 1/2: the whole torus
  double mean = 0.0;
  for (double v : abs0) mean += v;
  mean /= static_cast<double>(total);
  for (size_t i = 0; i < total; ++i) best[i] = std::max(best[i], mean);
  return best;
}

namespace {

std::vector<double> peetre_impl(const GridFunction& c, const std::vector<double>& weight,
                                int stride) {
  const int d = c.dim, n = c.n;
  if (stride < 1 || n % stride != 0) throw std::invalid_argument("peetre: bad stride");
  const int m = n / stride;
  const size_t samples = GridFunction::total(d, m);
  std::vector<double> out(samples, 0.0);
  std::vector<double> absc(c.size());
  for (size_t i = 0; i < c.size(); ++i) absc[i] = std::abs(c.samples[i]);

  std::vector<int> xs(d, 0);
  for (size_t s = 0; s < samples; ++s) {
    double best = 0.0;
    std::vector<int> y(d, 0);
    const size_t total = c.size();
    for (size_t i = 0; i < total; ++i) {
      // value at x - y
      size_t f = 0;
      for (int a = 0; a < d; ++a) {
        int t = xs[a] * stride - y[a];
        t %= n;
        if (t < 0) t += n;
        f = f * static_cast<size_t>(n) + static_cast<size_t>(t);
      }
      const double v = absc[f] * weight[i];
      if (v > best) best = v;
      int a = d - 1;
      while (a >= 0 && ++y[a] == n) y[a--] = 0;
    }
    out[s] = best;
    int a = d - 1;
    while (a >= 0 && ++xs[a] == m) xs[a--] = 0;
  }
  return out;
}

}  // namespace

std::vector<double> peetre_maximal(const Frame& frame, const GridFunction& field, size_t band,
                                   double lambda, int stride) {
  const Subband& b = frame.bands.at(band);
  const int d = frame.dim(), n = frame.n();
  std::vector<double> weight(GridFunction::total(d, n));
  std::vector<int> idx(d, 0);
  std::vector<double> y(d);
  for (size_t i = 0; i < weight.size(); ++i) {
    for (int a = 0; a < d; ++a) y[a] = static_cast<double>(signed_freq(idx[a], n)) / n;
    const auto by = apply_BA(b.cone, b.scale, b.shear, y);
    double r2 = 0.0;
    for (double v : by) r2 += v * v;
    weight[i] = std::pow(1.0 + frame.sigma() * std::sqrt(r2), -static_cast<double>(d) * lambda);
    int a = d - 1;
    while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
  }
  return peetre_impl(field, weight, stride);
}

std::vector<double> isotropic_peetre_maximal(const GridFunction& g, double lambda, double tau,
                                             int stride) {
  const int d = g.dim, n = g.n;
  std::vector<double> weight(g.size());
  std::vector<int> idx(d, 0);
  for (size_t i = 0; i < weight.size(); ++i) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const double c = static_cast<double>(signed_freq(idx[a], n)) / n;
      r2 += c * c;
    }
    weight[i] = std::pow(1.0 + tau * std::sqrt(r2), -static_cast<double>(d) * lambda);
    int a = d - 1;
    while (a >= 0 && ++idx[a] == n) idx[a--] = 0;
  }
  return peetre_impl(g, weight, stride);
}

SequenceCoefficients maximal_sequence(const SequenceCoefficients& seq, const MaximalParams& prm) {
  if (!(prm.r > 0.0)) throw std::invalid_argument("maximal_sequence: r must be > 0");
  SequenceCoefficients out = seq;
  const int d = seq.dim;
  parallel_for(seq.geometry.size(), [&](size_t b) {
    const Subband& g = seq.geometry[b];
    const auto& vals = seq.values[b];
    // Nonzero entries with their positions.
    std::vector<std::pair<std::vector<double>, double>> support;
    for (size_t i = 0; i < vals.size(); ++i) {
      const double a = std::abs(vals[i]);
      if (a > 0.0)
        support.emplace_back(coefficient_position(seq, b, static_cast<int64_t>(i)),
                             std::pow(a, prm.r));
    }
    auto& dst = out.values[b];
    if (support.empty()) {
      std::fill(dst.begin(), dst.end(), cplx(0.0, 0.0));
      return;
    }
    const double t = g.sigma * std::ldexp(1.0, g.scale);
    for_each_node(g, d, [&](int64_t flat, const double* xq) {
      double sum = 0.0;
      for (const auto& [xp, ar] : support) {
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) {
          double delta = std::fabs(xq[a] - xp[a]);
          if (seq.torus && delta > 0.5) delta = 1.0 - delta;
          r2 += delta * delta;
        }
        sum += ar / std::pow(1.0 + t * std::sqrt(r2), prm.n_decay);
      }
      dst[static_cast<size_t>(flat)] = std::pow(sum, 1.0 / prm.r);
    });
  });
  return out;
}

}  // namespace slt
