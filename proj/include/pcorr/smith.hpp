#pragma once

#include "pcorr/matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pcorr {

/// Thrown when a brute-force oracle is asked for a size it refuses to enumerate.
class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SmithTransforms {
  IntMatrix left;   // P
  IntMatrix right;  // Q
};

/// Smith normal form over Z.
///
/// `invariant_factors` has length n: s_1 | s_2 | ... | s_r followed by n - r
/// zeros, all non-negative. `dets` holds Delta_1..Delta_r where
/// Delta_i = s_1 * ... * s_i. When `transforms` is set, P * A * Q equals
/// diag(invariant_factors) exactly and |det P| = |det Q| = 1.
struct SmithData {
  std::vector<BigInt> invariant_factors;
  std::vector<BigInt> dets;
  std::optional<SmithTransforms> transforms;

  std::size_t rank() const noexcept { return dets.size(); }
};

/// Exponents of p in the nonzero invariant factors, non-decreasing.
struct LocalSmithProfile {
  Prime p;
  std::vector<std::int64_t> e;

  std::size_t rank() const noexcept { return e.size(); }
  std::int64_t total() const noexcept;

  friend bool operator==(const LocalSmithProfile&, const LocalSmithProfile&) = default;
};

SmithData smith_form(const IntMatrix& a, bool want_transforms = false);

/// Delta_1..Delta_r as cumulative products of invariant factors. For n <= 5 the
/// result is additionally cross-checked against the minor-GCD definition and
/// std::logic_error is thrown on disagreement.
std::vector<BigInt> determinantal_divisors(const IntMatrix& a);

/// Delta_i computed directly as the GCD of all i x i minors, for i up to the
/// rank. Throws UnsupportedSize for n > 5.
std::vector<BigInt> determinantal_divisors_by_minors(const IntMatrix& a);

LocalSmithProfile local_profile(const SmithData& smith, Prime p);
LocalSmithProfile local_profile(const IntMatrix& a, Prime p);

/// Profile of the Smith form of `a rem p^m` over Z/p^mZ: exponents of
/// invariant factors that are nonzero modulo p^m (i.e. below m).
LocalSmithProfile smith_profile_mod_pm(const IntMatrix& a, Prime p, unsigned long m);

}  // namespace pcorr
