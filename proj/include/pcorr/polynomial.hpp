#pragma once

#include "pcorr/valuation.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pcorr {

struct Term {
  BigInt coeff;
  std::vector<unsigned> exponents;  // one per variable
};

/// Sparse multivariate polynomial over Z in a fixed number of variables.
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables, std::vector<Term> terms = {});

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  Polynomial& add_term(BigInt coeff, std::vector<unsigned> exponents);

  /// Highest total degree among terms with nonzero coefficient (0 if none).
  unsigned total_degree() const;

  /// True when every coefficient is divisible by p.
  bool vanishes_mod(Prime p) const;

  /// g(point) mod p, with point coordinates given as naturals.
  unsigned long evaluate_mod(std::span<const std::uint64_t> point, Prime p) const;

 private:
  std::size_t variables_;
  std::vector<Term> terms_;
};

}  // namespace pcorr
