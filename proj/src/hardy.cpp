#include "jsmap/hardy.hpp"

#include <cmath>
#include <stdexcept>

namespace jsmap {

HardyElement::HardyElement(int max_degree, int fiber_dim) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  if (fiber_dim < 1) throw std::invalid_argument("fiber_dim must be >= 1");
  coeffs_ = CMatrix::Zero(fiber_dim, max_degree);
}

HardyElement HardyElement::unit_mode(int n, int max_degree, int fiber_dim,
                                     int component) {
  HardyElement f(max_degree, fiber_dim);
  if (n < 1 || n > max_degree) throw std::invalid_argument("mode out of range");
  if (component < 0 || component >= fiber_dim)
    throw std::invalid_argument("fiber component out of range");
  f.coeffs_(component, n - 1) = 1.0;
  return f;
}

HardyElement HardyElement::from_scalar_coeffs(const CVector& coeffs) {
  HardyElement f(static_cast<int>(coeffs.size()), 1);
  f.coeffs_.row(0) = coeffs.transpose();
  return f;
}

CVector HardyElement::coefficient(int n) const {
  if (n < 1 || n > max_degree()) throw std::invalid_argument("mode out of range");
  return coeffs_.col(n - 1);
}

void HardyElement::set_coefficient(int n, const CVector& value) {
  if (n < 1 || n > max_degree()) throw std::invalid_argument("mode out of range");
  if (value.size() != fiber_dim())
    throw std::invalid_argument("fiber dimension mismatch");
  coeffs_.col(n - 1) = value;
}

CVector HardyElement::scalar_coeffs() const {
  if (fiber_dim() != 1)
    throw std::invalid_argument("scalar_coeffs requires fiber_dim == 1");
  return coeffs_.row(0).transpose();
}

Complex inner_product(const HardyElement& f, const HardyElement& g) {
  if (f.max_degree() != g.max_degree() || f.fiber_dim() != g.fiber_dim())
    throw std::invalid_argument("inner_product: truncation mismatch");
  // sum_n (f_n, g_n)_K, conjugate-linear in the second argument
  return (g.table().conjugate().cwiseProduct(f.table())).sum();
}

HardyElement smoothing_power(const HardyElement& f, int times) {
  HardyElement out = f;
  if (times == 0) return out;
  for (int n = 1; n <= f.max_degree(); ++n) {
    double factor = std::pow(static_cast<double>(n + 1), -times);
    out.table().col(n - 1) *= factor;
  }
  return out;
}

double sobolev_norm(const HardyElement& f, int p) {
  double sum = 0.0;
  for (int n = 1; n <= f.max_degree(); ++n) {
    double w = std::pow(static_cast<double>(n + 1), -2.0 * p);
    sum += f.table().col(n - 1).squaredNorm() * w;
  }
  return std::sqrt(sum);
}

std::vector<CVector> sample_on_torus(const HardyElement& f, int grid_size) {
  const int N = f.max_degree();
  if (grid_size < N + 1)
    throw std::invalid_argument("sample_on_torus: grid must have M >= N+1");
  std::vector<CVector> out(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    CVector value = CVector::Zero(f.fiber_dim());
    for (int n = 1; n <= N; ++n) {
      double angle = kTwoPi * n * k / grid_size;
      value += f.table().col(n - 1) * Complex(std::cos(angle), std::sin(angle));
    }
    out[k] = value;
  }
  return out;
}

HardyElement project_from_samples(const std::vector<CVector>& values,
                                  int max_degree) {
  const int M = static_cast<int>(values.size());
  if (M < max_degree + 1)
    throw std::invalid_argument("project_from_samples: grid must have M >= N+1");
  const int d = static_cast<int>(values.front().size());
  HardyElement f(max_degree, d);
  for (int n = 1; n <= max_degree; ++n) {
    CVector coeff = CVector::Zero(d);
    for (int k = 0; k < M; ++k) {
      double angle = -kTwoPi * n * k / M;
      coeff += values[k] * Complex(std::cos(angle), std::sin(angle));
    }
    f.set_coefficient(n, coeff / static_cast<double>(M));
  }
  return f;
}

}  // namespace jsmap
