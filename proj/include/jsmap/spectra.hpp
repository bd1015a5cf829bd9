#pragma once

#include <string>
#include <vector>

#include "jsmap/types.hpp"

namespace jsmap {

/// Eigenvalues with algebraic multiplicity of a dense complex matrix.
/// Throws on solver non-convergence, never returns silently wrong data.
CVector eigenvalues(const CMatrix& m);

/// Greedy nearest-neighbor matching between two equal-size multisets, ties
/// broken lexicographically by (re, im). Returns the largest matched distance.
double matched_max_distance(CVector a, CVector b);

struct SpectrumReport {
  CVector eigs_a;
  CVector eigs_d;
  double max_mismatch = 0.0;       // matched eigenvalue distance
  double adjoint_deviation = 0.0;  // entrywise max of D(A*) - D(A)*
  std::string note;
};

/// Builds the truncated D(A) through the symbolic shift-model route and
/// compares its spectrum and adjoint against A's.
SpectrumReport compare_spectra(const CMatrix& a);

/// (sum_i sigma_i^p)^{1/p} over singular values; requires p >= 1.
double schatten_norm(const CMatrix& m, double p);

}  // namespace jsmap
