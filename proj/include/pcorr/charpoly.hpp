#pragma once

#include "pcorr/matrix.hpp"

#include <vector>

namespace pcorr {

/// det(xI - A) = x^n + f_1 x^{n-1} + ... + f_n, stored as f_1..f_n.
///
/// Indexing follows the coefficient's distance from the leading term, so
/// f(i) pairs naturally with the i-th determinantal divisor.
struct CharPoly {
  std::vector<BigInt> coeffs;

  std::size_t degree() const noexcept { return coeffs.size(); }
  /// 1-based access: f(1) .. f(n).
  const BigInt& f(std::size_t i) const { return coeffs.at(i - 1); }

  /// Largest i with f_i != 0, or 0 when the polynomial is x^n.
  std::size_t last_nonzero() const noexcept;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Division-free Berkowitz recurrence.
CharPoly char_poly(const IntMatrix& a);

/// f_i = (-1)^i * (sum of all principal i x i minors). Independent oracle for
/// char_poly; throws UnsupportedSize for n > 5.
CharPoly char_poly_minor_oracle(const IntMatrix& a);

/// Companion matrix whose characteristic polynomial is x^n + f_1 x^{n-1} + ... + f_n.
IntMatrix companion(const CharPoly& f);

}  // namespace pcorr
