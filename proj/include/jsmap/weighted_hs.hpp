#pragma once

#include <vector>

#include "jsmap/types.hpp"

namespace jsmap {

/// Sobolev weight pair: source order r, target order p, for maps
/// H_+^r(K) -> H_+^p(K).
struct WeightPair {
  int r = 0;
  int p = 0;
};

/// B_{mn} = A_{mn} (n+1)^r / (m+1)^p (semantic 1-based m, n). Its Frobenius
/// norm is the truncated weighted Hilbert-Schmidt norm, its largest singular
/// value the Sobolev operator norm.
CMatrix scaled_matrix(const CMatrix& a, WeightPair w);

/// sqrt(sum_{m,n} |A_{mn}|^2 (n+1)^{2r} / (m+1)^{2p}).
double whs_norm(const CMatrix& a, WeightPair w);

/// Largest singular value of the scaled matrix; bounded above by whs_norm.
double operator_norm_sobolev(const CMatrix& a, WeightPair w);

/// Truncation study of the decay criterion |A_{mn}| <= C / (1 + |n-m|^l).
struct DecayReport {
  double scale = 0.0;       // C
  double decay = 0.0;       // l
  WeightPair weights;
  bool l_condition = false;  // l > r + 1/2
  bool p_condition = false;  // p > r + 1/2
  std::vector<int> truncations;
  std::vector<double> norms;       // whs norm per truncation
  std::vector<double> increments;  // successive differences
};

DecayReport decay_membership(double scale, double decay, WeightPair w,
                             const std::vector<int>& truncations);

}  // namespace jsmap
