// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/transform.hpp"

namespace slt {

// Smoothness parameters (alpha, p, q); p or q may be infinity.
struct SmoothnessParams {
  double alpha = 0.0;
  double p = 2.0;
  double q = 2.0;

  void validate(bool require_finite_p = false) const;
};

struct MaximalParams {
  double r = 1.0;       // exponent of the smoothed envelope
  double n_decay = 6.0; // polynomial decay order N
  double lambda = 1.0;  // Peetre weight exponent
};

// ---- distribution-side norms -------------------------------------------

// ||f * Psi||_p + l^q over bands of |Q_j|^{-alpha} ||f * psi_band||_p.
double besov_ab_norm(const Frame& frame, const GridFunction& f, const SmoothnessParams& prm);
double besov_ab_norm(const Frame& frame, const CoefficientField& field,
                     const SmoothnessParams& prm);
// ||f * Psi||_p + || l^q-aggregate of |Q_j|^{-alpha} |f * psi_band| ||_p.
double tl_ab_norm(const Frame& frame, const GridFunction& f, const SmoothnessParams& prm);
double tl_ab_norm(const Frame& frame, const CoefficientField& field, const SmoothnessParams& prm);

double dyadic_distribution_norm(const DyadicStack& stack, const GridFunction& f,
                                const SmoothnessParams& prm, bool triebel_lizorkin);
double dyadic_distribution_norm(const DyadicStack& stack, const CoefficientField& field,
                                const SmoothnessParams& prm, bool triebel_lizorkin);

// Evaluate several TL norms of the same field in one pass over the bands.
std::vector<double> tl_ab_norm_multi(const Frame& frame, const CoefficientField& field,
                                     const std::vector<SmoothnessParams>& prms);
std::vector<double> dyadic_tl_norm_multi(const DyadicStack& stack, const CoefficientField& field,
                                         const std::vector<SmoothnessParams>& prms);

// ---- sequence-side norms -------------------------------------------------

// Weight per coefficient uses its own sampling-cell volume |Q|.
double besov_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm);
// Quadrature grid of quad_n^d points realizes the L^p integral of the
// cellwise l^q aggregate.
double tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm, int quad_n);

// Precomputed quadrature-point -> cell map, reusable across sequences that
// share the same band geometry.
struct CellQuadrature {
  int quad_n = 0;
  std::vector<std::vector<int64_t>> cells;  // per band, per quadrature point
};
CellQuadrature make_cell_quadrature(const SequenceCoefficients& seq, int quad_n);
double tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm,
                   const CellQuadrature& quad, bool dyadic_weights = false);

double dyadic_besov_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm);
double dyadic_tl_seq_norm(const SequenceCoefficients& seq, const SmoothnessParams& prm,
                          int quad_n);

// ---- maximal machinery ----------------------------------------------------

// Hardy-Littlewood maximal function over grid-aligned cubes with dyadic
// half-widths up to n/4 (plus the point itself).
std::vector<double> hl_maximal(const GridFunction& g);

// Shear-anisotropic Peetre maximal function of one band's field, evaluated
// on an x-sublattice with the given stride:
//   sup_y |c(x - y)| / (1 + sigma |B^[l] A^j y|)^{d lambda}.
std::vector<double> peetre_maximal(const Frame& frame, const GridFunction& field, size_t band,
                                   double lambda, int stride);

// Isotropic Peetre maximal function sup_y |g(x-y)| / (1 + tau |y|)^{d lambda}.
std::vector<double> isotropic_peetre_maximal(const GridFunction& g, double lambda, double tau,
                                             int stride);

// Smoothed envelope (s*_{r,N})_Q = (sum_P |s_P|^r (1 + t_j |x_Q - x_P|)^{-N})^{1/r},
// with P running over Q's own band and t_j = sigma 2^j (2^nu dyadic).
SequenceCoefficients maximal_sequence(const SequenceCoefficients& seq, const MaximalParams& prm);

}  // namespace slt
