#include "pcorr/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcorr {

Polynomial::Polynomial(std::size_t variables, std::vector<Term> terms)
    : variables_(variables) {
  for (auto& t : terms) add_term(std::move(t.coeff), std::move(t.exponents));
}

Polynomial& Polynomial::add_term(BigInt coeff, std::vector<unsigned> exponents) {
  if (exponents.size() != variables_) {
    throw std::invalid_argument("term has " + std::to_string(exponents.size()) +
                                " exponents, polynomial has " + std::to_string(variables_) +
                                " variables");
  }
  terms_.push_back({std::move(coeff), std::move(exponents)});
  return *this;
}

unsigned Polynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& t : terms_) {
    if (sgn(t.coeff) == 0) continue;
    deg = std::max(deg, std::accumulate(t.exponents.begin(), t.exponents.end(), 0u));
  }
  return deg;
}

bool Polynomial::vanishes_mod(Prime p) const {
  for (const auto& t : terms_) {
    if (!mpz_divisible_ui_p(t.coeff.get_mpz_t(), p.value())) return false;
  }
  return true;
}

unsigned long Polynomial::evaluate_mod(std::span<const std::uint64_t> point, Prime p) const {
  if (point.size() != variables_) throw std::invalid_argument("point dimension mismatch");
  const unsigned long q = p.value();
  unsigned __int128 acc = 0;
  for (const auto& t : terms_) {
    unsigned __int128 term = mpz_fdiv_ui(t.coeff.get_mpz_t(), q);
    for (std::size_t v = 0; v < variables_; ++v) {
      const unsigned __int128 x = point[v] % q;
      for (unsigned k = 0; k < t.exponents[v]; ++k) term = term * x % q;
    }
    acc = (acc + term) % q;
  }
  return static_cast<unsigned long>(acc);
}

}  // namespace pcorr
