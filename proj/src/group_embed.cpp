#include "jsmap/group_embed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jsmap {

int FiniteGroup::inverse(int g) const {
  for (int h = 0; h < order(); ++h)
    if (mul(g, h) == identity) return h;
  throw std::invalid_argument("group element has no inverse");
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < order(); ++i)
    if (elements[i] == name) return i;
  throw std::invalid_argument("unknown group element: " + name);
}

void FiniteGroup::validate() const {
  const int q = order();
  if (q < 1 || static_cast<int>(table.size()) != q)
    throw std::invalid_argument("group table size mismatch");
  if (identity < 0 || identity >= q)
    throw std::invalid_argument("identity index out of range");
  for (int g = 0; g < q; ++g) {
    if (static_cast<int>(table[g].size()) != q)
      throw std::invalid_argument("group table row size mismatch");
    std::vector<bool> seen_row(q, false), seen_col(q, false);
    for (int h = 0; h < q; ++h) {
      const int gh = table[g][h];
      const int hg = table[h][g];
      if (gh < 0 || gh >= q || hg < 0 || hg >= q)
        throw std::invalid_argument("group table entry out of range");
      if (seen_row[gh] || seen_col[hg])
        throw std::invalid_argument("group table is not a Latin square");
      seen_row[gh] = seen_col[hg] = true;
    }
    if (table[identity][g] != g || table[g][identity] != g)
      throw std::invalid_argument("identity element does not act as identity");
  }
}

FiniteGroup FiniteGroup::trivial() {
  return FiniteGroup{{"e"}, {{0}}, 0};
}

FiniteGroup FiniteGroup::klein() {
  // elements e, a, b, ab with a^2 = b^2 = e
  return FiniteGroup{{"e", "a", "b", "ab"},
                     {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                     0};
}

FiniteGroup FiniteGroup::cyclic(int q) {
  if (q < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  FiniteGroup g;
  g.identity = 0;
  g.table.assign(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i) {
    g.elements.push_back("g" + std::to_string(i));
    for (int j = 0; j < q; ++j) g.table[i][j] = (i + j) % q;
  }
  return g;
}

long integer_enumeration(long m) { return m >= 0 ? 2 * m + 1 : -2 * m; }

RMatrix finite_isometry(const FiniteGroup& g, int h, int n) {
  const int q = g.order();
  RMatrix s = RMatrix::Zero(n, n);
  for (int k = 0; q * k + h < n; ++k) s(q * k + h, k) = 1.0;
  return s;
}

RMatrix embed_finite(const FiniteGroup& g, int element, int n) {
  const int q = g.order();
  if (n % q != 0)
    throw std::invalid_argument("embed_finite: group order must divide N");
  RMatrix d = RMatrix::Zero(n, n);
  for (int k = 0; k < n / q; ++k)
    for (int h = 0; h < q; ++h)
      d(q * k + h, q * k + g.mul(element, h)) = 1.0;
  return d;
}

RMatrix embed_integers(long m, int n) {
  RMatrix d = RMatrix::Zero(n, n);
  auto add_band = [&d, n](long up, long down, double sign) {
    // S_0^up (S_0*)^down, truncated: e_j -> e_{j - down + up}
    if (up > n - 1 || down > n - 1) return;
    for (long col = down + 1; col <= n; ++col) {
      const long row = col - down + up;
      if (row >= 1 && row <= n) d(row - 1, col - 1) += sign;
    }
  };
  for (long h = -n; h <= n; ++h) {
    const long kh = integer_enumeration(h);
    const long kmh = integer_enumeration(m + h);
    add_band(kh - 1, kmh - 1, 1.0);
    add_band(kh, kmh, -1.0);
  }
  return d;
}

int integers_interior_size(long m, int n) {
  // |K(h) - K(m+h)| <= 2|m| + 1; a column is exact once its image row fits
  return std::max(0, n - (2 * static_cast<int>(std::labs(m)) + 1));
}

HomomorphismReport check_homomorphism(const FiniteGroup& g, int n) {
  g.validate();
  HomomorphismReport report;
  report.interior = n;
  const int q = g.order();
  std::vector<RMatrix> d(q);
  for (int e = 0; e < q; ++e) d[e] = embed_finite(g, e, n);
  report.identity_deviation =
      (d[g.identity] - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const double dev = (d[a] * d[b] - d[g.mul(a, b)]).cwiseAbs().maxCoeff();
      report.max_product_deviation = std::max(report.max_product_deviation, dev);
    }
    const double tdev =
        (d[a].transpose() - d[g.inverse(a)]).cwiseAbs().maxCoeff();
    report.max_transpose_deviation = std::max(report.max_transpose_deviation, tdev);
  }
  report.injective = true;
  for (int a = 0; a < q && report.injective; ++a)
    for (int b = a + 1; b < q; ++b)
      if ((d[a] - d[b]).cwiseAbs().maxCoeff() == 0.0) report.injective = false;
  return report;
}

HomomorphismReport check_homomorphism_integers(int window, int n) {
  HomomorphismReport report;
  // margin covering products of two embeddings across the window
  const int interior = n - (4 * window + 4);
  if (interior < 1)
    throw std::invalid_argument("check_homomorphism_integers: N too small");
  report.interior = interior;
  auto block = [interior](const RMatrix& m) {
    return m.topLeftCorner(interior, interior);
  };
  std::vector<RMatrix> d;
  for (int m = -window; m <= window; ++m) d.push_back(embed_integers(m, n));
  auto at = [&d, window](int m) -> const RMatrix& { return d[m + window]; };
  report.identity_deviation =
      (block(at(0)) - RMatrix::Identity(interior, interior)).cwiseAbs().maxCoeff();
  for (int m = -window; m <= window; ++m) {
    for (int k = -window; k <= window; ++k) {
      if (std::abs(m + k) > window) continue;
      const double dev =
          (block(at(m) * at(k)) - block(at(m + k))).cwiseAbs().maxCoeff();
      report.max_product_deviation = std::max(report.max_product_deviation, dev);
    }
    const double tdev =
        (block(at(m).transpose()) - block(at(-m))).cwiseAbs().maxCoeff();
    report.max_transpose_deviation = std::max(report.max_transpose_deviation, tdev);
  }
  report.injective = true;
  for (std::size_t a = 0; a < d.size() && report.injective; ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b)
      if ((block(d[a]) - block(d[b])).cwiseAbs().maxCoeff() == 0.0)
        report.injective = false;
  return report;
}

ModuleActionReport check_module_action(const FiniteGroup& g,
                                       const std::vector<double>& alpha,
                                       const std::vector<double>& beta,
                                       int element, int n) {
  g.validate();
  const int q = g.order();
  if (static_cast<int>(alpha.size()) != q || static_cast<int>(beta.size()) != q)
    throw std::invalid_argument("check_module_action: support exceeds window");
  if (n % q != 0)
    throw std::invalid_argument("check_module_action: group order must divide N");
  const int interior = n / q;  // columns the digit isometries map without overflow
  ModuleActionReport report;
  report.interior = interior;

  RMatrix lowering = RMatrix::Zero(n, n);  // d(alpha) = sum alpha(h) S_h
  RMatrix raising = RMatrix::Zero(n, n);   // dbar(beta) = sum beta(h) S_h*
  for (int h = 0; h < q; ++h) {
    const RMatrix s = finite_isometry(g, h, n);
    lowering += alpha[h] * s;
    raising += beta[h] * s.transpose();
  }
  const RMatrix d = embed_finite(g, element, n);

  // D(g) d(alpha) = d(alpha o g) with (alpha o g)(h) = alpha(gh)
  RMatrix composed = RMatrix::Zero(n, n);
  for (int h = 0; h < q; ++h)
    composed += alpha[g.mul(element, h)] * finite_isometry(g, h, n);
  report.covariant_deviation = (d * lowering - composed).cwiseAbs().maxCoeff();

  // dbar(beta) D(g) = dbar(beta o g^-1)
  const int inv = g.inverse(element);
  RMatrix composed_star = RMatrix::Zero(n, n);
  for (int h = 0; h < q; ++h)
    composed_star +=
        beta[g.mul(inv, h)] * finite_isometry(g, h, n).transpose();
  report.contravariant_deviation =
      (raising * d - composed_star).cwiseAbs().maxCoeff();

  // dbar(beta) d(alpha) = (sum alpha beta) Id on the overflow-free block
  double dot = 0.0;
  for (int h = 0; h < q; ++h) dot += alpha[h] * beta[h];
  const RMatrix scalar_block = (raising * lowering).topLeftCorner(interior, interior);
  report.scalar_deviation =
      (scalar_block - dot * RMatrix::Identity(interior, interior))
          .cwiseAbs()
          .maxCoeff();
  return report;
}

CMatrix functional_calculus(const RMatrix& orthogonal,
                            const std::function<Complex(Complex)>& f) {
  const int n = static_cast<int>(orthogonal.rows());
  Eigen::ComplexEigenSolver<CMatrix> solver(orthogonal.cast<Complex>());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("functional_calculus: eigensolver failed");
  CVector mapped(n);
  for (int i = 0; i < n; ++i) mapped(i) = f(solver.eigenvalues()(i));
  const CMatrix& v = solver.eigenvectors();
  return v * mapped.asDiagonal() * v.inverse();
}

Complex principal_sqrt_on_circle(Complex lambda) {
  double theta = std::arg(lambda);
  // arg returns (-pi, pi]; eigenvalues computed just below the cut snap to pi
  if (theta < 0.0 && theta + 3.141592653589793238 < 1e-9)
    theta += kTwoPi;
  const double mag = std::sqrt(std::abs(lambda));
  return {mag * std::cos(theta / 2.0), mag * std::sin(theta / 2.0)};
}

}  // namespace jsmap
