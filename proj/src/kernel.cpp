#include "jsmap/kernel.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "jsmap/group_embed.hpp"

namespace jsmap {

namespace {

Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

void require_square(const CMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw std::invalid_argument(std::string(who) + ": square matrix required");
}

/// Coefficient matrix of the operator a kernel evaluator induces on the
/// truncated Hardy space: entry (m-1, n-1) is the z^m coefficient of the
/// kernel applied to z^n. Evaluates the kernel once on an M x M grid.
CMatrix induced_matrix(const KernelFn& kernel, int n, int grid_size) {
  const int m_grid = grid_size;
  CMatrix values(m_grid, m_grid);
  for (int j = 0; j < m_grid; ++j)
    for (int k = 0; k < m_grid; ++k)
      values(j, k) = kernel(kTwoPi * j / m_grid, kTwoPi * k / m_grid);
  // analysis in phi (rows), synthesis in psi (columns)
  CMatrix synth(m_grid, n);
  CMatrix analysis(n, m_grid);
  for (int k = 0; k < m_grid; ++k) {
    for (int mode = 1; mode <= n; ++mode) {
      synth(k, mode - 1) = unit(kTwoPi * mode * k / m_grid);
      analysis(mode - 1, k) = unit(-kTwoPi * mode * k / m_grid);
    }
  }
  return (analysis * values * synth) / (static_cast<double>(m_grid) * m_grid);
}

}  // namespace

OperatorMatrix OperatorMatrix::dense(CMatrix a) {
  require_square(a, "OperatorMatrix::dense");
  return {std::move(a), MatrixKind::Dense};
}

OperatorMatrix OperatorMatrix::diagonal(const CVector& values) {
  OperatorMatrix out;
  out.entries = CMatrix::Zero(values.size(), values.size());
  out.entries.diagonal() = values;
  out.kind = MatrixKind::Diagonal;
  return out;
}

OperatorMatrix OperatorMatrix::jordan(const std::vector<Complex>& eigs,
                                      const std::vector<int>& boundaries) {
  if (eigs.empty() || eigs.size() != boundaries.size())
    throw std::invalid_argument("jordan: one eigenvalue per block required");
  int prev = 0;
  for (int b : boundaries) {
    if (b <= prev) throw std::invalid_argument("jordan: boundaries must increase");
    prev = b;
  }
  const int n = boundaries.back();
  OperatorMatrix out;
  out.entries = CMatrix::Zero(n, n);
  int start = 0;
  for (std::size_t block = 0; block < boundaries.size(); ++block) {
    const int stop = boundaries[block];
    for (int i = start; i < stop; ++i) {
      out.entries(i, i) = eigs[block];
      if (i + 1 < stop) out.entries(i + 1, i) = 1.0;  // subdiagonal inside block
    }
    start = stop;
  }
  out.kind = MatrixKind::Jordan;
  return out;
}

OperatorMatrix OperatorMatrix::toeplitz(const std::map<int, Complex>& offsets,
                                        int n) {
  OperatorMatrix out;
  out.entries = CMatrix::Zero(n, n);
  for (int m = 1; m <= n; ++m)
    for (int col = 1; col <= n; ++col)
      if (auto it = offsets.find(m - col); it != offsets.end())
        out.entries(m - 1, col - 1) = it->second;
  out.kind = MatrixKind::Toeplitz;
  return out;
}

OperatorMatrix OperatorMatrix::two_sided_toeplitz(
    const std::map<int, Complex>& offsets, int n) {
  OperatorMatrix out;
  out.entries = CMatrix::Zero(n, n);
  for (long p = -n; p <= n; ++p) {
    const long row = integer_enumeration(p);
    if (row > n) continue;
    for (long q = -n; q <= n; ++q) {
      const long col = integer_enumeration(q);
      if (col > n) continue;
      if (auto it = offsets.find(static_cast<int>(p - q)); it != offsets.end())
        out.entries(row - 1, col - 1) = it->second;
    }
  }
  out.kind = MatrixKind::TwoSidedToeplitz;
  return out;
}

KernelSeries kernel_from_matrix(const OperatorMatrix& a) {
  require_square(a.entries, "kernel_from_matrix");
  return {a.entries};
}

OperatorMatrix matrix_from_kernel(const KernelSeries& k) {
  return OperatorMatrix::dense(k.coeffs);
}

SymbolF symbol_from_matrix(const OperatorMatrix& a) {
  require_square(a.entries, "symbol_from_matrix");
  const int n = a.size();
  SymbolF f;
  f.difference = CMatrix::Zero(std::max(n - 1, 0), std::max(n - 1, 0));
  for (int m = 1; m <= n - 1; ++m)
    for (int col = 1; col <= n - 1; ++col)
      f.difference(m - 1, col - 1) = a.entries(m, col) - a.entries(m - 1, col - 1);
  f.z_boundary = CVector::Zero(n);
  for (int m = 0; m <= n - 1; ++m) f.z_boundary(m) = a.entries(m, 0);
  f.w_boundary = CVector::Zero(std::max(n - 1, 0));
  for (int col = 1; col <= n - 1; ++col) f.w_boundary(col - 1) = a.entries(0, col);
  return f;
}

CuntzPolynomial symbol_polynomial(const SymbolF& f) {
  CuntzPolynomial out(Alphabet::O2);
  const int interior = static_cast<int>(f.difference.rows());
  for (int m = 1; m <= interior; ++m) {
    for (int n = 1; n <= interior; ++n) {
      CuntzWord w;
      w.creation.assign(m, 0);
      w.annihilation.assign(n, 0);
      out.add_term(w, f.difference(m - 1, n - 1));
    }
  }
  for (int m = 0; m < f.z_boundary.size(); ++m) {
    CuntzWord w;
    w.creation.assign(m, 0);
    out.add_term(w, f.z_boundary(m));
  }
  for (int n = 1; n <= f.w_boundary.size(); ++n) {
    CuntzWord w;
    w.annihilation.assign(n, 0);
    out.add_term(w, f.w_boundary(n - 1));
  }
  return out;
}

HardyElement apply_kernel(const KernelSeries& k, const HardyElement& f,
                          int grid_size) {
  const int n = k.size();
  if (f.max_degree() != n)
    throw std::invalid_argument("apply_kernel: truncation mismatch");
  if (grid_size < 2 * n + 1)
    throw std::invalid_argument("apply_kernel: grid must have M >= 2N+1");
  const auto samples = sample_on_torus(f, grid_size);
  // w-profile of the kernel per output mode: P(m,k) = sum_n K_mn e^{-i n psi_k}
  CMatrix profile(n, grid_size);
  for (int k_idx = 0; k_idx < grid_size; ++k_idx) {
    for (int m = 1; m <= n; ++m) {
      Complex acc = 0.0;
      for (int col = 1; col <= n; ++col)
        acc += k.coeffs(m - 1, col - 1) * unit(-kTwoPi * col * k_idx / grid_size);
      profile(m - 1, k_idx) = acc;
    }
  }
  HardyElement out(n, f.fiber_dim());
  for (int m = 1; m <= n; ++m) {
    CVector coeff = CVector::Zero(f.fiber_dim());
    for (int k_idx = 0; k_idx < grid_size; ++k_idx)
      coeff += profile(m - 1, k_idx) * samples[k_idx];
    out.set_coefficient(m, coeff / static_cast<double>(grid_size));
  }
  return out;
}

KernelFn evaluator(const KernelSeries& k) {
  CMatrix coeffs = k.coeffs;
  const int n = k.size();
  return [coeffs, n](double phi, double psi) {
    // sum over m of e^{i m phi} (sum over n of K_mn e^{-i n psi})
    Complex total = 0.0;
    for (int m = 1; m <= n; ++m) {
      Complex row = 0.0;
      for (int col = 1; col <= n; ++col)
        row += coeffs(m - 1, col - 1) * unit(-psi * col);
      total += row * unit(phi * m);
    }
    return total;
  };
}

HardyElement apply_kernel_fn(const KernelFn& kernel, const TruncationConfig& cfg,
                             const HardyElement& f, int grid_size) {
  const int n = cfg.max_degree;
  if (f.max_degree() != n)
    throw std::invalid_argument("apply_kernel_fn: truncation mismatch");
  if (grid_size < 2 * n + 1)
    throw std::invalid_argument("apply_kernel_fn: grid must have M >= 2N+1");
  const auto samples = sample_on_torus(f, grid_size);
  std::vector<CVector> out_samples(grid_size, CVector::Zero(f.fiber_dim()));
  for (int j = 0; j < grid_size; ++j) {
    CVector acc = CVector::Zero(f.fiber_dim());
    for (int k = 0; k < grid_size; ++k)
      acc += kernel(kTwoPi * j / grid_size, kTwoPi * k / grid_size) * samples[k];
    out_samples[j] = acc / static_cast<double>(grid_size);
  }
  return project_from_samples(out_samples, n);
}

CatalogKernel CatalogKernel::log_diagonal(double alpha) {
  if (std::abs(alpha) >= 1.0)
    throw std::invalid_argument("log_diagonal requires |alpha| < 1");
  CatalogKernel c;
  c.kind = Kind::LogDiagonal;
  c.alpha = alpha;
  return c;
}

CatalogKernel CatalogKernel::geometric_half() {
  CatalogKernel c;
  c.kind = Kind::GeometricHalf;
  return c;
}

CatalogKernel CatalogKernel::jordan_form(std::vector<Complex> eigenvalues,
                                         std::vector<int> boundaries) {
  int prev = 0;
  for (int b : boundaries) {
    if (b <= prev)
      throw std::invalid_argument("jordan_form: boundaries must increase");
    prev = b;
  }
  if (eigenvalues.size() != boundaries.size())
    throw std::invalid_argument("jordan_form: one eigenvalue per block required");
  CatalogKernel c;
  c.kind = Kind::JordanForm;
  c.eigenvalues = std::move(eigenvalues);
  c.boundaries = std::move(boundaries);
  return c;
}

CatalogKernel CatalogKernel::toeplitz(std::map<int, Complex> symbol) {
  CatalogKernel c;
  c.kind = Kind::Toeplitz;
  c.symbol = std::move(symbol);
  return c;
}

CatalogKernel CatalogKernel::two_sided_toeplitz(std::map<int, Complex> symbol) {
  CatalogKernel c;
  c.kind = Kind::TwoSidedToeplitz;
  c.symbol = std::move(symbol);
  return c;
}

KernelFn CatalogKernel::kernel_fn(int n) const {
  switch (kind) {
    case Kind::LogDiagonal: {
      const double alpha = this->alpha;
      // the kernel exactly as printed; the coefficient series sums to its
      // negative (see the catalog report note)
      return [alpha](double phi, double psi) {
        return std::log(1.0 - alpha * unit(phi - psi));
      };
    }
    case Kind::GeometricHalf:
      return [](double phi, double psi) {
        return 1.0 / (1.0 - 0.5 * unit(phi - psi));
      };
    case Kind::JordanForm: {
      if (boundaries.back() != n)
        throw std::invalid_argument("jordan kernel: boundaries must end at N");
      auto eigs = eigenvalues;
      auto bounds = boundaries;
      return [eigs, bounds, n](double phi, double psi) {
        const double theta = phi - psi;
        // diagonal part, block by block, as finite geometric sums
        Complex total = 0.0;
        int start = 0;
        for (std::size_t block = 0; block < bounds.size(); ++block) {
          for (int m = start + 1; m <= bounds[block]; ++m)
            total += eigs[block] * unit(m * theta);
          start = bounds[block];
        }
        // subdiagonal part: e^{i phi} (sum_{m=1}^{N-1} e^{im theta} - kappa),
        // kappa truncated to block boundaries < N
        std::set<int> boundary_set(bounds.begin(), bounds.end());
        Complex sub = 0.0;
        for (int m = 1; m <= n - 1; ++m)
          if (!boundary_set.count(m)) sub += unit(m * theta);
        total += unit(phi) * sub;
        return total;
      };
    }
    case Kind::Toeplitz:
    case Kind::TwoSidedToeplitz:
      // truncated double series of the realized matrix
      return evaluator(kernel_from_matrix(matrix(n)));
  }
  throw std::logic_error("unknown catalog kind");
}

OperatorMatrix CatalogKernel::matrix(int n) const {
  switch (kind) {
    case Kind::LogDiagonal: {
      CVector diag(n);
      double power = 1.0;
      for (int m = 1; m <= n; ++m) {
        power *= alpha;
        diag(m - 1) = power / m;
      }
      return OperatorMatrix::diagonal(diag);
    }
    case Kind::GeometricHalf: {
      CVector diag(n);
      for (int m = 1; m <= n; ++m) diag(m - 1) = std::pow(2.0, -m);
      return OperatorMatrix::diagonal(diag);
    }
    case Kind::JordanForm:
      if (boundaries.back() != n)
        throw std::invalid_argument("jordan matrix: boundaries must end at N");
      return OperatorMatrix::jordan(eigenvalues, boundaries);
    case Kind::Toeplitz:
      return OperatorMatrix::toeplitz(symbol, n);
    case Kind::TwoSidedToeplitz:
      return OperatorMatrix::two_sided_toeplitz(symbol, n);
  }
  throw std::logic_error("unknown catalog kind");
}

EquivalenceReport kernels_equivalent(const KernelFn& k1, const KernelFn& k2,
                                     const TruncationConfig& cfg, double tol) {
  const int grid = std::max(cfg.default_grid(), 2 * cfg.max_degree + 1);
  const CMatrix m1 = induced_matrix(k1, cfg.max_degree, grid);
  const CMatrix m2 = induced_matrix(k2, cfg.max_degree, grid);
  const double dev = (m1 - m2).cwiseAbs().maxCoeff();
  return {dev <= tol, dev};
}

std::vector<CatalogCheck> run_catalog_checks(int n, unsigned long seed) {
  std::vector<CatalogCheck> out;
  TruncationConfig cfg{n, 1};
  const int grid = cfg.default_grid();

  {  // (a): log kernel vs the coefficient-series oracle diag(alpha^m / m)
    const double alpha = 0.5;
    CatalogCheck check;
    check.id = "a";
    check.description = "log kernel vs diagonal alpha^n/n series";
    const auto catalog = CatalogKernel::log_diagonal(alpha);
    const auto series = evaluator(kernel_from_matrix(catalog.matrix(n)));
    const auto closed = catalog.kernel_fn(n);
    const double tail =
        std::pow(alpha, n + 1) / ((n + 1) * (1.0 - alpha));
    double sign_dev = 0.0;       // series + closed form: zero if series = -closed
    double magnitude_dev = 0.0;  // | |closed| - |series| |
    for (int j = 0; j < grid; ++j) {
      for (int k = 0; k < grid; ++k) {
        const double phi = kTwoPi * j / grid, psi = kTwoPi * k / grid;
        const Complex s = series(phi, psi);
        const Complex c = closed(phi, psi);
        sign_dev = std::max(sign_dev, std::abs(s + c));
        magnitude_dev =
            std::max(magnitude_dev, std::abs(std::abs(s) - std::abs(c)));
      }
    }
    check.max_deviation = magnitude_dev;
    check.tolerance = tail + 1e-10;
    check.passed = magnitude_dev <= check.tolerance && sign_dev <= check.tolerance;
    check.note =
        "series sums to the negative of the printed closed form (sign "
        "deviation " +
        std::to_string(sign_dev) + ", tail bound " + std::to_string(tail) + ")";
    out.push_back(check);
  }

  {  // (b): geometric kernel vs diag(2^-n), equivalent modulo the annihilator
    CatalogCheck check;
    check.id = "b";
    check.description = "geometric kernel vs diag(2^-n) route";
    const auto catalog = CatalogKernel::geometric_half();
    const auto series = evaluator(kernel_from_matrix(catalog.matrix(n)));
    const double tol = std::pow(2.0, -n) + 1e-10;
    const auto report = kernels_equivalent(catalog.kernel_fn(n), series, cfg, tol);
    check.max_deviation = report.max_deviation;
    check.tolerance = tol;
    check.passed = report.equivalent;
    check.note = "closed form differs from the series by the constant 1, "
                 "annihilated by the contour integral";
    out.push_back(check);
  }

  {  // (c): Jordan-form kernel action vs the explicit Jordan matrix
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<int> step(1, std::max(n / 3, 1));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> boundaries;
      int at = 0;
      while (at < n) {
        at = std::min(n, at + step(rng));
        boundaries.push_back(at);
      }
      std::vector<Complex> eigs;
      for (std::size_t i = 0; i < boundaries.size(); ++i)
        eigs.emplace_back(coeff(rng), coeff(rng));
      const auto catalog = CatalogKernel::jordan_form(eigs, boundaries);
      const auto series = evaluator(kernel_from_matrix(catalog.matrix(n)));
      const auto report =
          kernels_equivalent(catalog.kernel_fn(n), series, cfg, 1e-8);
      CatalogCheck check;
      check.id = "c";
      check.description = "jordan-form kernel vs explicit Jordan matrix, " +
                          std::to_string(boundaries.size()) + " blocks";
      check.max_deviation = report.max_deviation;
      check.tolerance = 1e-8;
      check.passed = report.equivalent;
      out.push_back(check);
    }
  }

  {  // (d): double-sided Toeplitz through the integer enumeration
    std::map<int, Complex> symbol{{-2, {0.3, -0.1}}, {0, {1.0, 0.0}},
                                  {1, {0.0, 0.5}},   {3, {-0.2, 0.2}}};
    const auto catalog = CatalogKernel::two_sided_toeplitz(symbol);
    const auto series = evaluator(kernel_from_matrix(catalog.matrix(n)));
    const auto report = kernels_equivalent(catalog.kernel_fn(n), series, cfg, 1e-10);
    CatalogCheck check;
    check.id = "d";
    check.description = "two-sided Toeplitz symbol via enumeration K(m)";
    check.max_deviation = report.max_deviation;
    check.tolerance = 1e-10;
    check.passed = report.equivalent;
    check.note = "indices pushed onto N through K(m) = 2m+1 / -2m";
    out.push_back(check);
  }

  {  // (e): one-sided Toeplitz, coefficientwise re-indexing is exact
    std::map<int, Complex> symbol{{-1, {0.25, 0.75}}, {0, {-1.0, 0.5}},
                                  {2, {0.5, -0.25}}};
    const auto catalog = CatalogKernel::toeplitz(symbol);
    const CMatrix route = kernel_from_matrix(catalog.matrix(n)).coeffs;
    CMatrix direct = CMatrix::Zero(n, n);
    for (int m = 1; m <= n; ++m)
      for (int col = 1; col <= n; ++col)
        if (auto it = symbol.find(m - col); it != symbol.end())
          direct(m - 1, col - 1) = it->second;
    CatalogCheck check;
    check.id = "e";
    check.description = "Toeplitz kernel coefficients vs matrix route";
    check.max_deviation = (route - direct).cwiseAbs().maxCoeff();
    check.tolerance = 0.0;
    check.passed = check.max_deviation == 0.0;
    out.push_back(check);
  }

  return out;
}

}  // namespace jsmap
