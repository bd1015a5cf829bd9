#pragma once

#include <random>

#include "jsmap/types.hpp"

namespace jsmap::testutil {

inline CMatrix random_matrix(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  return a;
}

inline CVector random_vector(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v;
}

}  // namespace jsmap::testutil
