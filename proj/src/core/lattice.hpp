// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace slt {

// Index of one shearlet: cone axis (1-based), scale j, shear vector l of
// length d-1 with |l_i| <= 2^j, and integer translation k of length d.
struct ShearIndex {
  int cone = 1;
  int scale = 0;
  std::vector<int64_t> shear;
  std::vector<int64_t> translation;

  int dim() const { return static_cast<int>(shear.size()) + 1; }
  bool boundary() const;
};

// Cell Q_{j,l,k} = A^-j B^-[l] (Q0 + k); volume 2^-(d+1)j.
struct Cell {
  ShearIndex owner;
  std::vector<double> lower_left;
  double volume = 1.0;
};

struct DyadicIndex {
  int scale = 0;  // nu
  std::vector<int64_t> translation;
};

// Dyadic cube 2^-nu (Q0 + k); volume 2^-(nu d).
struct DyadicCell {
  DyadicIndex owner;
  std::vector<double> lower_left;
  double volume = 1.0;
};

using Matrix = std::vector<std::vector<int64_t>>;

// diag(2^j,...,4^j,...,2^j) with 4^j on the cone axis; det = 2^{(d+1)j}.
Matrix dilation_matrix(int cone, int scale, int dim);
// Identity with the shear vector placed off-diagonal in the cone row; det = 1.
Matrix shear_matrix(int cone, const std::vector<int64_t>& shear, int dim);

int64_t matrix_det(const Matrix& m);

// y = B^[l] A^j x and its inverse, for the given cone.  Exact for dyadic
// rational inputs (all matrix entries are integers or integers over 4^j).
std::vector<double> apply_BA(int cone, int scale, const std::vector<int64_t>& shear,
                             const std::vector<double>& x);
std::vector<double> apply_invAB(int cone, int scale, const std::vector<int64_t>& shear,
                                const std::vector<double>& y);

Cell cell_of(const ShearIndex& idx);
DyadicCell dyadic_cell_of(const DyadicIndex& idx, int dim);

// min over unit-sphere samples of |B^[l] A^j x| / (2^j |x|).
double min_expansion(int cone, int scale, const std::vector<int64_t>& shear, int dim,
                     int sample_count, uint64_t seed = 2024);
// min over unit-sphere samples of |A^-j B^-[l] x| / |x|.
double min_inverse_contraction(int cone, int scale, const std::vector<int64_t>& shear, int dim,
                               int sample_count, uint64_t seed = 2024);

// Exact cardinality of {l : |l_i| <= 2^j}, i.e. (2^{j+1}+1)^{d-1}.
int64_t shear_count(int scale, int dim);

// All shear vectors with |l_i| <= 2^j, in lexicographic order.
std::vector<std::vector<int64_t>> enumerate_shears(int scale, int dim);

// Cell containing x for fixed (cone, j, l): the unique k with
// B^[l] A^j x - k in [0,1)^d.
std::vector<int64_t> cell_containing(int cone, int scale, const std::vector<int64_t>& shear,
                                     const std::vector<double>& x);

}  // namespace slt
