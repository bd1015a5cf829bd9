#pragma once

#include <vector>

#include "jsmap/types.hpp"

namespace jsmap {

/// Truncation parameters shared by all Hardy-space computations.
/// N is the highest retained power of z, d the fiber dimension dim K.
struct TruncationConfig {
  int max_degree = 1;  // N >= 1
  int fiber_dim = 1;   // d >= 1

  /// Default torus grid. Even and above the 2N+1 exactness bound, so every
  /// quadrature of bandwidth <= 2N data is exact up to rounding.
  int default_grid() const { return 2 * max_degree + 2; }
};

/// Truncated element of the vector-valued Hardy space,
///   f(z) = sum_{n=1}^{N} f_n z^n,   f_n in C^d.
/// Powers start at z^1; no constant term is ever stored. Column n-1 of the
/// coefficient table holds f_n.
class HardyElement {
 public:
  HardyElement(int max_degree, int fiber_dim = 1);

  /// z^n in the given component of the fiber (coefficient 1, everything else 0).
  static HardyElement unit_mode(int n, int max_degree, int fiber_dim = 1,
                                int component = 0);
  /// Scalar (d = 1) element from a coefficient vector (entry k is f_{k+1}).
  static HardyElement from_scalar_coeffs(const CVector& coeffs);

  int max_degree() const { return static_cast<int>(coeffs_.cols()); }
  int fiber_dim() const { return static_cast<int>(coeffs_.rows()); }

  /// f_n for the 1-based power n.
  CVector coefficient(int n) const;
  void set_coefficient(int n, const CVector& value);

  /// d x N coefficient table; column n-1 is f_n.
  const CMatrix& table() const { return coeffs_; }
  CMatrix& table() { return coeffs_; }

  /// Scalar coefficients as a vector; requires d = 1.
  CVector scalar_coeffs() const;

  double norm() const { return coeffs_.norm(); }

 private:
  CMatrix coeffs_;
};

/// Hilbert-space scalar product sum_n (f_n, g_n)_K, conjugate-linear in g.
Complex inner_product(const HardyElement& f, const HardyElement& g);

/// Power of the smoothing operator J(f)(z) = (1/z) int_0^z f: coefficient of
/// z^n is scaled by (n+1)^{-times}. Negative `times` applies the inverse
/// (z d/dz + 1) the corresponding number of times.
HardyElement smoothing_power(const HardyElement& f, int times);

/// Sobolev norm sqrt(sum_n ||f_n||^2 / (n+1)^{2p}) = ||J^p f||.
double sobolev_norm(const HardyElement& f, int p);

/// Values f(e^{2 pi i k / M}) for k = 0..M-1. Requires M >= N+1.
std::vector<CVector> sample_on_torus(const HardyElement& f, int grid_size);

/// Discrete Fourier analysis of torus samples, keeping modes 1..N only
/// (projection onto the truncated Hardy space). Requires M >= N+1.
HardyElement project_from_samples(const std::vector<CVector>& values,
                                  int max_degree);

}  // namespace jsmap
