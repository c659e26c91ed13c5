#include "pcorr/valuation.hpp"

#include <stdexcept>

namespace pcorr {

Prime::Prime(unsigned long p) : value_(p) {
  if (p < 2) {
    throw std::invalid_argument("prime must be >= 2, got " + std::to_string(p));
  }
  BigInt big(p);
  // GMP runs BPSW first, which has no counterexamples below 2^64.
  if (mpz_probab_prime_p(big.get_mpz_t(), 50) == 0) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

std::int64_t Valuation::value() const {
  if (is_infinite()) throw std::logic_error("value() of infinite valuation");
  return value_;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

Valuation val_p(const BigInt& a, Prime p) {
  if (sgn(a) == 0) return Valuation::infinity();
  return val_p_finite(a, p);
}

std::int64_t val_p_finite(const BigInt& a, Prime p) {
  if (sgn(a) == 0) throw std::invalid_argument("valuation of zero is infinite");
  // Fast path for the overwhelmingly common p-free case.
  if (!mpz_divisible_ui_p(a.get_mpz_t(), p.value())) return 0;
  BigInt rest;
  BigInt pp(p.value());
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t()));
}

Valuation val_p_rat(const BigRat& q, Prime p) {
  if (sgn(q) == 0) return Valuation::infinity();
  return val_p_finite(q.get_num(), p) - val_p_finite(q.get_den(), p);
}

BigInt rem_pm(const BigInt& a, const BigInt& modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt prime_power(Prime p, unsigned long m) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p.value(), m);
  return r;
}

std::string rat_to_string(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace pcorr
