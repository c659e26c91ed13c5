#pragma once

#include "pcorr/matrix.hpp"

#include <random>
#include <string>

namespace pcorr::fixtures {

inline std::string data_path(const std::string& name) {
  return std::string(PCORR_TEST_DATA_DIR) + "/" + name;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix a(n);
  for (auto& e : a.entries()) e = d(rng);
  return a;
}

// Product of random elementary operations; determinant is +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-3, 3);
  for (int s = 0; s < steps; ++s) {
    const auto i = idx(rng);
    auto j = idx(rng);
    if (i == j) j = (j + 1) % n;
    const long k = c(rng);
    for (std::size_t col = 0; col < n; ++col) u(i, col) += k * u(j, col);
  }
  return u;
}

inline IntMatrix seven_adic_u() {
  return {{6, 1, 0, 20}, {1, 1, 1, 0}, {1, 1, 1, 2}, {1, 3, 0, 1}};
}

inline IntMatrix seven_adic_v() {
  return {{1, 1, 1, 17}, {0, 0, 3, 2}, {0, 5, 1, 3}, {1, 0, 9, 56}};
}

}  // namespace pcorr::fixtures
