#include "jsmap/weighted_hs.hpp"

#include <cmath>
#include <stdexcept>

namespace jsmap {

CMatrix scaled_matrix(const CMatrix& a, WeightPair w) {
  CMatrix b = a;
  for (int m = 1; m <= a.rows(); ++m)
    for (int n = 1; n <= a.cols(); ++n)
      b(m - 1, n - 1) *= std::pow(static_cast<double>(n + 1), w.r) /
                         std::pow(static_cast<double>(m + 1), w.p);
  return b;
}

double whs_norm(const CMatrix& a, WeightPair w) {
  double sum = 0.0;
  for (int m = 1; m <= a.rows(); ++m)
    for (int n = 1; n <= a.cols(); ++n)
      sum += std::norm(a(m - 1, n - 1)) *
             std::pow(static_cast<double>(n + 1), 2.0 * w.r) /
             std::pow(static_cast<double>(m + 1), 2.0 * w.p);
  return std::sqrt(sum);
}

double operator_norm_sobolev(const CMatrix& a, WeightPair w) {
  Eigen::JacobiSVD<CMatrix> svd(scaled_matrix(a, w));
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("operator_norm_sobolev: singular-value solver failed");
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

DecayReport decay_membership(double scale, double decay, WeightPair w,
                             const std::vector<int>& truncations) {
  if (scale < 0.0) throw std::invalid_argument("decay_membership: C must be > 0");
  DecayReport report;
  report.scale = scale;
  report.decay = decay;
  report.weights = w;
  report.l_condition = decay > w.r + 0.5;
  report.p_condition = w.p > w.r + 0.5;
  report.truncations = truncations;
  double previous = 0.0;
  for (std::size_t i = 0; i < truncations.size(); ++i) {
    const int n = truncations[i];
    CMatrix a(n, n);
    for (int m = 1; m <= n; ++m)
      for (int col = 1; col <= n; ++col)
        a(m - 1, col - 1) =
            scale / (1.0 + std::pow(std::abs(col - m), decay));
    const double norm = whs_norm(a, w);
    report.norms.push_back(norm);
    if (i > 0) report.increments.push_back(norm - previous);
    previous = norm;
  }
  return report;
}

}  // namespace jsmap
