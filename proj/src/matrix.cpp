#include "pcorr/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pcorr {

IntMatrix::IntMatrix(std::size_t n) : n_(n), entries_(n * n) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw std::invalid_argument("matrix dimension must be >= 1");
  if (entries_.size() != n * n) {
    throw std::invalid_argument("expected " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> diag) {
  IntMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntMatrix rem_modulus(const IntMatrix& a, const BigInt& modulus) {
  IntMatrix r(a.size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    r.entries()[k] = rem_pm(a.entries()[k], modulus);
  }
  return r;
}

IntMatrix rem_pm(const IntMatrix& a, Prime p, unsigned long m) {
  if (m == 0) throw std::invalid_argument("rem_pm requires m >= 1");
  return rem_modulus(a, prime_power(p, m));
}

namespace {

// Fraction-free elimination over a row-major work buffer. Pivot row is the
// first nonzero in the current column. Returns the rank; `sign` tracks row
// swaps and `last_pivot` the final leading minor.
std::size_t bareiss(std::vector<BigInt>& m, std::size_t rows, std::size_t cols, int& sign,
                    BigInt& last_pivot) {
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * cols + j]; };
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(i, j) * at(r, c) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  last_pivot = prev;
  return r;
}

}  // namespace

BigInt det(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> work(a.entries().begin(), a.entries().end());
  int sign = 1;
  BigInt last;
  if (bareiss(work, n, n, sign, last) < n) return 0;
  return sign * last;
}

std::size_t rank(const IntMatrix& a) {
  std::vector<BigInt> work(a.entries().begin(), a.entries().end());
  int sign = 1;
  BigInt last;
  return bareiss(work, a.size(), a.size(), sign, last);
}

BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  if (cols.size() != k) throw std::invalid_argument("minor needs equal row/column counts");
  if (k == 0) return 1;
  std::vector<BigInt> work;
  work.reserve(k * k);
  for (std::size_t i : rows) {
    for (std::size_t j : cols) work.push_back(a(i, j));
  }
  int sign = 1;
  BigInt last;
  if (bareiss(work, k, k, sign, last) < k) return 0;
  return sign * last;
}

unsigned long det_mod(const IntMatrix& a, Prime p) {
  BigInt d = det(a);
  return mpz_fdiv_ui(d.get_mpz_t(), p.value());
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << a.size() << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) os << ' ';
      os << a(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pcorr
