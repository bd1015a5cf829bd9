#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jsmap/hardy.hpp"
#include "test_util.hpp"

using namespace jsmap;

namespace {

HardyElement random_element(int n, int d, std::mt19937_64& rng) {
  HardyElement f(n, d);
  f.table() = testutil::random_matrix(std::max(n, d), rng).topLeftCorner(d, n);
  return f;
}

// independent quadrature oracle: (1/M) sum_k (f(z_k), g(z_k))_K on the torus
Complex quadrature_inner(const HardyElement& f, const HardyElement& g, int m) {
  const auto fs = sample_on_torus(f, m);
  const auto gs = sample_on_torus(g, m);
  Complex total = 0.0;
  for (int k = 0; k < m; ++k) total += gs[k].dot(fs[k]);  // Eigen dot conjugates lhs
  return total / static_cast<double>(m);
}

}  // namespace

TEST_CASE("inner product on unit modes") {
  auto e1 = HardyElement::unit_mode(1, 4);
  auto e2 = HardyElement::unit_mode(2, 4);
  CHECK(inner_product(e1, e1) == Complex(1.0));
  CHECK(inner_product(e1, e2) == Complex(0.0));
}

TEST_CASE("inner product rejects truncation mismatch") {
  HardyElement f(4), g(5), h(4, 2);
  CHECK_THROWS_AS(inner_product(f, g), std::invalid_argument);
  CHECK_THROWS_AS(inner_product(f, h), std::invalid_argument);
}

TEST_CASE("inner product equals the contour-integral quadrature oracle") {
  std::mt19937_64 rng(11);
  const int n = 9, d = 3;
  const auto f = random_element(n, d, rng);
  const auto g = random_element(n, d, rng);
  const Complex direct = inner_product(f, g);
  const Complex oracle = quadrature_inner(f, g, 2 * n + 1);
  CHECK(std::abs(direct - oracle) < 1e-12);
}

TEST_CASE("smoothing operator on single modes") {
  auto f = HardyElement::unit_mode(1, 3);
  auto jf = smoothing_power(f, 1);
  CHECK(jf.coefficient(1)(0) == Complex(0.5));  // J(z) = z/2
  CHECK(smoothing_power(f, 0).table() == f.table());
}

TEST_CASE("smoothing powers compose and invert exactly") {
  std::mt19937_64 rng(12);
  const auto f = random_element(7, 2, rng);
  const auto round_trip = smoothing_power(smoothing_power(f, 1), -1);
  CHECK((round_trip.table() - f.table()).cwiseAbs().maxCoeff() < 1e-14);
  for (int p : {-2, 0, 3}) {
    for (int q : {-1, 2}) {
      const auto lhs = smoothing_power(smoothing_power(f, p), q);
      const auto rhs = smoothing_power(f, p + q);
      CHECK((lhs.table() - rhs.table()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("sobolev norm values") {
  auto f = HardyElement::unit_mode(1, 5);
  CHECK(sobolev_norm(f, 1) == doctest::Approx(0.5).epsilon(1e-14));
  std::mt19937_64 rng(13);
  const auto g = random_element(6, 1, rng);
  CHECK(sobolev_norm(g, 0) == doctest::Approx(g.norm()).epsilon(1e-14));
  for (int p : {-2, -1, 0, 1, 3}) {
    const auto jp = smoothing_power(g, p);
    const double via_inner = std::sqrt(std::abs(inner_product(jp, jp)));
    CHECK(sobolev_norm(g, p) == doctest::Approx(via_inner).epsilon(1e-12));
  }
}

TEST_CASE("sobolev norm decreases in p") {
  std::mt19937_64 rng(14);
  const auto f = random_element(8, 1, rng);
  double previous = sobolev_norm(f, -3);
  for (int p = -2; p <= 3; ++p) {
    const double current = sobolev_norm(f, p);
    CHECK(current < previous);
    previous = current;
  }
}

TEST_CASE("torus sampling of single modes and round trip") {
  auto zero = HardyElement(3, 2);
  for (const auto& value : sample_on_torus(zero, 8))
    CHECK(value.cwiseAbs().maxCoeff() == 0.0);

  auto z = HardyElement::unit_mode(1, 1);
  const auto values = sample_on_torus(z, 4);  // z at 4th roots of unity
  const Complex expected[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(values[k](0) - expected[k]) < 1e-15);

  std::mt19937_64 rng(15);
  const auto f = random_element(6, 2, rng);
  const auto back = project_from_samples(sample_on_torus(f, 7), 6);
  CHECK((back.table() - f.table()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("sampling rejects undersized grids") {
  HardyElement f(6);
  CHECK_THROWS_AS(sample_on_torus(f, 6), std::invalid_argument);
  std::vector<CVector> samples(4, CVector::Zero(1));
  CHECK_THROWS_AS(project_from_samples(samples, 6), std::invalid_argument);
}

TEST_CASE("projection discards constants and out-of-range modes") {
  // constant samples are orthogonal to the Hardy space
  std::vector<CVector> constant(9, CVector::Constant(1, Complex(2.5, -1.0)));
  const auto f = project_from_samples(constant, 4);
  CHECK(f.table().cwiseAbs().maxCoeff() < 1e-14);

  // samples of z^{N+1} on a 2N+2 grid project to zero
  const int n = 5;
  auto high = HardyElement::unit_mode(n + 1, n + 1);
  const auto samples = sample_on_torus(high, 2 * n + 2);
  const auto projected = project_from_samples(samples, n);
  CHECK(projected.table().cwiseAbs().maxCoeff() < 1e-14);

  // a retained pure mode comes back as the unit coefficient
  const auto kept = project_from_samples(sample_on_torus(
      HardyElement::unit_mode(3, n), 2 * n + 2), n);
  CHECK(std::abs(kept.coefficient(3)(0) - 1.0) < 1e-14);
}

TEST_CASE("Parseval identity on the torus") {
  std::mt19937_64 rng(16);
  const int n = 10;
  const auto f = random_element(n, 2, rng);
  const double coeff_side = std::abs(inner_product(f, f));
  double sample_side = 0.0;
  const int m = 2 * n + 1;
  for (const auto& value : sample_on_torus(f, m)) sample_side += value.squaredNorm();
  sample_side /= m;
  CHECK(sample_side == doctest::Approx(coeff_side).epsilon(1e-12));
}
