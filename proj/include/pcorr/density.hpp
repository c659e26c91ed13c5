#pragma once

#include "pcorr/polynomial.hpp"
#include "pcorr/smith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcorr {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which matrices form the denominator of the density percentages.
enum class Convention {
  All,          // every matrix with entries in [0, p^m)
  DetFiltered,  // only those with v_p(det) < m
};

Convention parse_convention(const std::string& name);
std::string to_string(Convention c);

inline const BigInt kDefaultBudget = BigInt(1) << 30;

struct DensityOptions {
  Convention convention = Convention::All;
  unsigned threads = 1;
  BigInt budget = kDefaultBudget;
};

struct PartitionStats {
  std::uint64_t size = 0;
  std::uint64_t char_count = 0;
  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

/// One row of the density table.
///
/// Fractions are exact (count / total), not yet scaled to percent. Both maps
/// are independent of the chosen convention.
///
/// `partitions` covers only matrices with v_p(det) < m, keyed by their local
/// Smith exponents; sizes sum to `det_filtered`.
/// `profile_classes` groups every enumerated matrix by its local Smith
/// exponents over Z (key length is the rank). `min_char_fraction` is the
/// smallest p-characterized share among classes that contain at least one
/// p-characterized matrix.
struct DensityRow {
  Prime p;
  unsigned m;
  unsigned n;
  Convention convention;
  std::uint64_t enumerated = 0;    // (p^m)^(n^2)
  std::uint64_t det_filtered = 0;  // matrices with v_p(det) < m
  std::uint64_t total = 0;         // denominator under `convention`
  std::uint64_t char_count = 0;
  std::uint64_t corr_count = 0;
  BigRat char_fraction{};
  BigRat corr_fraction{};
  std::map<std::vector<std::int64_t>, PartitionStats> partitions{};
  std::map<std::vector<std::int64_t>, PartitionStats> profile_classes{};
  std::optional<BigRat> min_char_fraction{};  // empty when no class qualifies
};

/// Exhaustive count over all n x n matrices with entries in [0, p^m). Throws
/// BudgetExceeded when (p^m)^(n^2) exceeds options.budget. Counts are
/// independent of options.threads.
DensityRow enumerate_density(Prime p, unsigned m, unsigned n, const DensityOptions& options = {});

/// `fraction` as a percentage, rounded half-up to two decimals ("56.25").
std::string render_percent(const BigRat& fraction);

struct GlCount {
  BigInt gl_order;     // |GL_n(Z/p^mZ)|
  BigInt matrices;     // p^(m n^2)
  BigRat ratio;        // matrices / gl_order
  bool below_four;
  std::optional<BigInt> exhaustive;  // brute-force count, when within limit
};

/// Closed form |GL_n(Z/pZ)| * p^((m-1) n^2); cross-checked by brute force when
/// p^(m n^2) <= exhaustive_limit.
GlCount gl_count(Prime p, unsigned m, unsigned n, std::uint64_t exhaustive_limit = 1u << 20);

struct OrbitReport {
  Prime p;
  unsigned m;
  std::vector<std::int64_t> e;
  std::uint64_t orbit_size = 0;  // |S_S^m|
  BigInt gl_order{};
  BigInt expected_stabilizer{};  // |GL|^2 / |S_S^m|
  std::uint64_t min_pairs = 0;   // min |P_A| over the orbit
  std::uint64_t max_pairs = 0;
  bool constant = false;
  bool matches_formula = false;

  bool passed() const noexcept { return constant && matches_formula; }
};

/// Enumerates every pair (L, R) with entries in [0, p^m), buckets the pairs by
/// A = (L S R) rem p^m with S = diag(p^e_i), and checks |P_A| over S_S^m.
/// Requires m > sum(e). Throws BudgetExceeded when (p^m)^(2 n^2) > budget.
OrbitReport orbit_stabilizer_check(Prime p, unsigned m, const std::vector<std::int64_t>& e,
                                   const BigInt& budget = kDefaultBudget);

struct ProotReport {
  std::uint64_t points = 0;
  std::uint64_t roots = 0;
  BigInt bound;  // ell^n * k * p^(n-1)
  bool holds = false;
};

/// Counts points of [0, ell*p)^n where g vanishes mod p and compares with the
/// counting bound. g must not vanish identically mod p.
ProotReport proot_count_check(const Polynomial& g, Prime p, unsigned ell,
                              const BigInt& budget = kDefaultBudget);

}  // namespace pcorr
