#include "jsmap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "jsmap/cuntz.hpp"

namespace jsmap {

CVector eigenvalues(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: QR iteration did not converge");
  return solver.eigenvalues();
}

namespace {

bool lex_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

}  // namespace

double matched_max_distance(CVector a, CVector b) {
  if (a.size() != b.size())
    throw std::invalid_argument("matched_max_distance: size mismatch");
  std::vector<Complex> left(a.data(), a.data() + a.size());
  std::vector<Complex> right(b.data(), b.data() + b.size());
  std::sort(left.begin(), left.end(), lex_less);
  std::sort(right.begin(), right.end(), lex_less);
  std::vector<bool> used(right.size(), false);
  double worst = 0.0;
  for (const Complex& value : left) {
    int best = -1;
    double best_dist = 0.0;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(value - right[j]);
      if (best < 0 || dist < best_dist ||
          (dist == best_dist && lex_less(right[j], right[best]))) {
        best = static_cast<int>(j);
        best_dist = dist;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

namespace {

CMatrix shift_model_image(const CMatrix& a) {
  const int n = static_cast<int>(a.rows());
  return shift_model_matrix(substitute_completeness(js_map_isometry_form(a)), n);
}

}  // namespace

SpectrumReport compare_spectra(const CMatrix& a) {
  SpectrumReport report;
  const CMatrix d = shift_model_image(a);
  report.eigs_a = eigenvalues(a);
  report.eigs_d = eigenvalues(d);
  report.max_mismatch = matched_max_distance(report.eigs_a, report.eigs_d);
  const CMatrix d_star = shift_model_image(a.adjoint());
  report.adjoint_deviation = (d_star - d.adjoint()).cwiseAbs().maxCoeff();
  report.note =
      "finite truncation: only eigenvalue multisets are compared; the "
      "point/residual spectrum dichotomy has no finite-dimensional counterpart";
  return report;
}

double schatten_norm(const CMatrix& m, double p) {
  if (p < 1.0) throw std::invalid_argument("schatten_norm: p must be >= 1");
  Eigen::JacobiSVD<CMatrix> svd(m);
  if (svd.info() != Eigen::Success)
    throw std::runtime_error("schatten_norm: singular-value solver failed");
  const auto& sigma = svd.singularValues();
  // factor out the largest singular value so large p does not underflow
  const double top = sigma.size() ? sigma(0) : 0.0;
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < sigma.size(); ++i) sum += std::pow(sigma(i) / top, p);
  return top * std::pow(sum, 1.0 / p);
}

}  // namespace jsmap
