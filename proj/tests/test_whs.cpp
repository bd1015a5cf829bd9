#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jsmap/weighted_hs.hpp"
#include "test_util.hpp"

using namespace jsmap;

TEST_CASE("weights cancel on the diagonal") {
  const int n = 9;
  for (int order : {-1, 0, 2})
    CHECK(whs_norm(CMatrix::Identity(n, n), {order, order}) ==
          doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-14));
}

TEST_CASE("single-entry matrix picks up the bare weight") {
  CMatrix e11 = CMatrix::Zero(5, 5);
  e11(0, 0) = 1.0;
  for (int r : {-1, 0, 1, 2})
    for (int p : {-1, 0, 1, 2})
      CHECK(whs_norm(e11, {r, p}) ==
            doctest::Approx(std::pow(2.0, r - p)).epsilon(1e-14));
}

TEST_CASE("diagonal alpha^n/n matrix against the direct summation oracle") {
  const int n = 16;
  const double alpha = 0.5;
  CVector diag(n);
  double sum = 0.0;
  for (int m = 1; m <= n; ++m) {
    diag(m - 1) = std::pow(alpha, m) / m;
    sum += std::pow(alpha, 2 * m) / (static_cast<double>(m) * m);
  }
  CMatrix a = CMatrix::Zero(n, n);
  a.diagonal() = diag;
  CHECK(whs_norm(a, {0, 0}) == doctest::Approx(std::sqrt(sum)).epsilon(1e-14));
}

TEST_CASE("whs norm agrees with the Frobenius norm of the scaled matrix") {
  std::mt19937_64 rng(51);
  const CMatrix a = testutil::random_matrix(10, rng);
  for (int r : {-1, 0, 2})
    for (int p : {-1, 1}) {
      const WeightPair w{r, p};
      CHECK(std::abs(whs_norm(a, w) - scaled_matrix(a, w).norm()) < 1e-12);
    }
}

TEST_CASE("operator norm of a diagonal matrix") {
  const int n = 6;
  CMatrix a = CMatrix::Zero(n, n);
  for (int m = 1; m <= n; ++m) a(m - 1, m - 1) = Complex(0.0, 1.0 / m);
  const WeightPair w{1, -1};
  double expected = 0.0;
  for (int m = 1; m <= n; ++m)
    expected = std::max(expected, std::pow(m + 1.0, w.r - w.p) / m);
  CHECK(operator_norm_sobolev(a, w) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("rank-one matrices achieve equality in the norm estimate") {
  std::mt19937_64 rng(52);
  const int n = 8;
  const CVector u = testutil::random_vector(n, rng);
  const CVector v = testutil::random_vector(n, rng);
  const CMatrix a = u * v.transpose();
  for (int r : {-1, 0, 1, 2})
    for (int p : {-1, 0, 1, 2}) {
      const WeightPair w{r, p};
      CHECK(std::abs(operator_norm_sobolev(a, w) - whs_norm(a, w)) < 1e-10);
    }
}

TEST_CASE("operator norm is bounded by the weighted HS norm, strictly for generic matrices") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const CMatrix a = testutil::random_matrix(7, rng);
    for (int r : {-1, 0, 1, 2})
      for (int p : {-1, 0, 1, 2}) {
        const WeightPair w{r, p};
        const double op = operator_norm_sobolev(a, w);
        const double hs = whs_norm(a, w);
        CHECK(op <= hs + 1e-10);
        CHECK(op < hs);  // random matrices have rank >= 2
      }
  }
}

TEST_CASE("whs norm is monotone in the weights for nonnegative matrices") {
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  const int n = 8;
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
  for (int p : {-1, 0, 1}) {
    double previous = whs_norm(a, {-2, p});
    for (int r = -1; r <= 2; ++r) {
      const double current = whs_norm(a, {r, p});
      CHECK(current >= previous);
      previous = current;
    }
  }
  for (int r : {-1, 0, 1}) {
    double previous = whs_norm(a, {r, -2});
    for (int p = -1; p <= 2; ++p) {
      const double current = whs_norm(a, {r, p});
      CHECK(current <= previous);
      previous = current;
    }
  }
}

TEST_CASE("decay study: summable tail") {
  const auto report = decay_membership(1.0, 2.0, {0, 1}, {16, 32, 64, 128});
  CHECK(report.l_condition);
  CHECK(report.p_condition);
  REQUIRE(report.increments.size() == 3);
  double previous = report.increments[0];
  for (std::size_t i = 1; i < report.increments.size(); ++i) {
    CHECK(report.increments[i] > 0.0);
    CHECK(report.increments[i] < previous);
    previous = report.increments[i];
  }
}

TEST_CASE("decay study: flat matrix grows linearly") {
  const auto report = decay_membership(1.0, 0.0, {0, 0}, {16, 32, 64});
  CHECK_FALSE(report.l_condition);
  CHECK_FALSE(report.p_condition);
  // Frobenius of the constant C/2 matrix is (C/2) N
  for (std::size_t i = 0; i < report.truncations.size(); ++i)
    CHECK(report.norms[i] ==
          doctest::Approx(0.5 * report.truncations[i]).epsilon(1e-12));
}

TEST_CASE("decay study: zero scale gives zero norms") {
  const auto report = decay_membership(0.0, 3.0, {1, 2}, {8, 16});
  for (double norm : report.norms) CHECK(norm == 0.0);
}
