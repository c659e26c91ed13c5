#include "pcorr/charpoly.hpp"

#include "combinations.hpp"
#include "pcorr/smith.hpp"

#include <stdexcept>

namespace pcorr {

std::size_t CharPoly::last_nonzero() const noexcept {
  for (std::size_t i = coeffs.size(); i > 0; --i) {
    if (sgn(coeffs[i - 1]) != 0) return i;
  }
  return 0;
}

// Berkowitz: with A_k the trailing principal block starting at row k,
// split A_k = [[a, R], [C, B]]. Then charpoly(A_k) = T * charpoly(B) where T
// is the lower-triangular Toeplitz matrix with first column
// (1, -a, -R C, -R B C, ..., -R B^{s-1} C), s = size(B).
CharPoly char_poly(const IntMatrix& a) {
  const std::size_t n = a.size();
  // v holds [1, c_1, ..., c_s] for the current trailing block.
  std::vector<BigInt> v{1, -a(n - 1, n - 1)};
  std::vector<BigInt> col;
  std::vector<BigInt> next;
  for (std::size_t k = n - 1; k-- > 0;) {
    const std::size_t s = n - 1 - k;  // size of B
    std::vector<BigInt> toeplitz;
    toeplitz.reserve(s + 2);
    toeplitz.push_back(1);
    toeplitz.push_back(-a(k, k));
    col.assign(s, 0);
    for (std::size_t i = 0; i < s; ++i) col[i] = a(k + 1 + i, k);
    for (std::size_t power = 0; power < s; ++power) {
      BigInt dot = 0;
      for (std::size_t j = 0; j < s; ++j) dot += a(k, k + 1 + j) * col[j];
      toeplitz.push_back(-dot);
      if (power + 1 < s) {
        next.assign(s, 0);
        for (std::size_t i = 0; i < s; ++i) {
          for (std::size_t j = 0; j < s; ++j) next[i] += a(k + 1 + i, k + 1 + j) * col[j];
        }
        col.swap(next);
      }
    }
    std::vector<BigInt> w(s + 2, 0);
    for (std::size_t i = 0; i < s + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += toeplitz[i - j] * v[j];
    }
    v.swap(w);
  }
  return CharPoly{std::vector<BigInt>(v.begin() + 1, v.end())};
}

CharPoly char_poly_minor_oracle(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n > 5) {
    throw UnsupportedSize("principal-minor oracle limited to n <= 5, got n = " +
                          std::to_string(n));
  }
  CharPoly out;
  out.coeffs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt sum = 0;
    for (const auto& idx : detail::combinations(n, i)) sum += minor(a, idx, idx);
    out.coeffs.push_back(i % 2 ? BigInt(-sum) : sum);
  }
  return out;
}

IntMatrix companion(const CharPoly& f) {
  const std::size_t n = f.degree();
  IntMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -f.coeffs[n - 1 - i];
  return c;
}

}  // namespace pcorr
