#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jsmap/cuntz.hpp"
#include "jsmap/hardy.hpp"
#include "jsmap/types.hpp"

namespace jsmap {

enum class MatrixKind { Dense, Diagonal, Jordan, Toeplitz, TwoSidedToeplitz };

/// Complex N x N table with entries[m][n] = <A e_m, f_n> (1-based semantic
/// indices). The kind tag records how the matrix was built.
struct OperatorMatrix {
  CMatrix entries;
  MatrixKind kind = MatrixKind::Dense;

  int size() const { return static_cast<int>(entries.rows()); }

  static OperatorMatrix dense(CMatrix a);
  static OperatorMatrix diagonal(const CVector& values);
  /// Lower-bidiagonal Jordan form: eigenvalue eigs[k] on block k, ones on the
  /// subdiagonal inside each block. Block k covers rows boundaries[k-1]+1 ..
  /// boundaries[k] (boundaries strictly increasing, last entry = N).
  static OperatorMatrix jordan(const std::vector<Complex>& eigs,
                               const std::vector<int>& boundaries);
  /// a_{m-n} by offset; offsets outside the table are zero.
  static OperatorMatrix toeplitz(const std::map<int, Complex>& offsets, int n);
  /// Double-sided Toeplitz symbol pushed onto N indices through the integer
  /// enumeration K(m) = 2m+1 (m >= 0), -2m (m < 0).
  static OperatorMatrix two_sided_toeplitz(const std::map<int, Complex>& offsets,
                                           int n);
};

/// Coefficient table of K(A,z,w) = sum_{m,n} A_{mn} z^m w^{-n}.
struct KernelSeries {
  CMatrix coeffs;  // (m-1, n-1) holds the coefficient of z^m w^{-n}

  int size() const { return static_cast<int>(coeffs.rows()); }
};

/// Symbol F(z,w) of the shift-form expansion: difference part
/// (m,n) -> A_{m+1,n+1} - A_{m,n} for z^m w^n, plus the two boundary series.
struct SymbolF {
  CMatrix difference;   // (m-1, n-1), m,n = 1..N-1
  CVector z_boundary;   // index m = 0..N-1, coefficient of z^m
  CVector w_boundary;   // index n-1, n = 1..N-1, coefficient of w^n
};

/// Pure re-indexing A_{mn} -> coefficient of z^m w^{-n}.
KernelSeries kernel_from_matrix(const OperatorMatrix& a);
OperatorMatrix matrix_from_kernel(const KernelSeries& k);

SymbolF symbol_from_matrix(const OperatorMatrix& a);

/// The O2 polynomial sum F_{mn} s_0^m (s_0*)^n + boundary words, i.e. the
/// shift-form expansion assembled from the symbol.
CuntzPolynomial symbol_polynomial(const SymbolF& f);

/// (1/2 pi i) contour integral of K(A,z,w) f(w) / w by M-point uniform
/// quadrature; exact up to rounding for M >= 2N+1.
HardyElement apply_kernel(const KernelSeries& k, const HardyElement& f,
                          int grid_size);

/// Pointwise kernel evaluator at (e^{i phi}, e^{i psi}).
using KernelFn = std::function<Complex(double phi, double psi)>;

KernelFn evaluator(const KernelSeries& k);

/// Operator action of an arbitrary kernel evaluator: sample, quadrature in
/// psi, project the phi-profile back onto modes 1..N.
HardyElement apply_kernel_fn(const KernelFn& kernel, const TruncationConfig& cfg,
                             const HardyElement& f, int grid_size);

/// Closed-form kernel catalog.
struct CatalogKernel {
  enum class Kind { LogDiagonal, GeometricHalf, JordanForm, TwoSidedToeplitz, Toeplitz };

  Kind kind;
  double alpha = 0.0;                       // LogDiagonal, |alpha| < 1
  std::vector<Complex> eigenvalues;         // JordanForm
  std::vector<int> boundaries;              // JordanForm, strictly increasing
  std::map<int, Complex> symbol;            // Toeplitz kinds

  static CatalogKernel log_diagonal(double alpha);
  static CatalogKernel geometric_half();
  static CatalogKernel jordan_form(std::vector<Complex> eigenvalues,
                                   std::vector<int> boundaries);
  static CatalogKernel toeplitz(std::map<int, Complex> symbol);
  static CatalogKernel two_sided_toeplitz(std::map<int, Complex> symbol);

  /// Closed-form kernel value at (e^{i phi}, e^{i psi}); series kinds are
  /// truncated at degree n.
  KernelFn kernel_fn(int n) const;

  /// The matrix whose Jordan-Schwinger kernel the closed form realizes.
  OperatorMatrix matrix(int n) const;
};

struct EquivalenceReport {
  bool equivalent = false;
  double max_deviation = 0.0;
};

/// Operator-action equality on the basis z^1..z^N: kernels differing by terms
/// annihilated by the contour integral (e.g. w-constants) compare equal.
EquivalenceReport kernels_equivalent(const KernelFn& k1, const KernelFn& k2,
                                     const TruncationConfig& cfg, double tol);

/// One row of the Example catalog verification table.
struct CatalogCheck {
  std::string id;
  std::string description;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

/// Runs the closed-form-vs-matrix-route comparison for every catalog entry.
std::vector<CatalogCheck> run_catalog_checks(int n, unsigned long seed = 20240801);

}  // namespace jsmap
