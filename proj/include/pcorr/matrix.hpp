#pragma once

#include "pcorr/valuation.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pcorr {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  /// Zero matrix of dimension n. Throws std::invalid_argument for n == 0.
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::size_t n, std::vector<BigInt> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const BigInt> diag);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t size() const noexcept { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  std::span<const BigInt> entries() const noexcept { return entries_; }
  std::span<BigInt> entries() noexcept { return entries_; }

  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Element-wise `rem p^m`; every output entry lies in [0, p^m).
IntMatrix rem_pm(const IntMatrix& a, Prime p, unsigned long m);
IntMatrix rem_modulus(const IntMatrix& a, const BigInt& modulus);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMatrix& a);

/// Rank over the rationals, by fraction-free elimination.
std::size_t rank(const IntMatrix& a);

/// Determinant of the submatrix selected by `rows` x `cols` (equal lengths).
BigInt minor(const IntMatrix& a, std::span<const std::size_t> rows,
             std::span<const std::size_t> cols);

/// Determinant reduced mod p, for nonsingularity checks over Z/pZ.
unsigned long det_mod(const IntMatrix& a, Prime p);

std::string to_string(const IntMatrix& a);

}  // namespace pcorr
