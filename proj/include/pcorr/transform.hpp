#pragma once

#include "pcorr/classify.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace pcorr {

/// P * A * Q = S with S the Smith form. S is diagonal, so its eigenvalues are
/// its invariant factors and it is p-correspondent at every prime.
struct SmithEquivalent {
  IntMatrix left;
  IntMatrix right;
  IntMatrix smith;
};

SmithEquivalent smith_equivalent(const IntMatrix& a);

struct TransformSample {
  IntMatrix left;   // U, entries in [0, bound)
  IntMatrix right;  // V, entries in [0, bound)
  std::uint64_t bound;
  std::uint64_t attempts;
  IntMatrix result;  // U * A * V
  ClassificationReport report;
};

/// Every sampling attempt failed. Carries the report of the last candidate.
class AttemptsExhausted : public std::runtime_error {
 public:
  AttemptsExhausted(std::uint64_t attempts, std::optional<ClassificationReport> last);

  std::uint64_t attempts() const noexcept { return attempts_; }
  const std::optional<ClassificationReport>& last_report() const noexcept { return last_; }

 private:
  std::uint64_t attempts_;
  std::optional<ClassificationReport> last_;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultMaxAttempts = 64;

/// Draws U, V with entries uniform in [0, bound) until det U and det V are
/// units mod p and U*A*V is p-characterized (hence p-correspondent).
/// Requires p | bound. Deterministic in `seed`.
TransformSample sample_correspondent(const IntMatrix& a, Prime p, std::uint64_t bound,
                                     std::uint64_t max_attempts, std::uint64_t seed);

/// Evaluates one fixed candidate pair (U, V). Returns the sample when the
/// pair succeeds, std::nullopt otherwise. `last` (if given) receives the
/// report of U*A*V whenever one was computed.
std::optional<TransformSample> try_candidate(const IntMatrix& a, Prime p,
                                             const IntMatrix& u, const IntMatrix& v,
                                             std::uint64_t bound,
                                             std::optional<ClassificationReport>* last = nullptr);

struct StabilityReport {
  Prime p;
  unsigned long m;
  IntMatrix reduced;  // A rem p^m
  LocalSmithProfile profile;
  LocalSmithProfile reduced_profile;
  std::vector<Valuation> f_vals;
  std::vector<Valuation> reduced_f_vals;
  bool a_characterized;
  bool reduced_characterized;
  bool profiles_agree;        // v_p(s_i) = v_p(s_i of A rem p^m)
  bool coefficients_agree;    // v_p(f_i) preserved whenever it is below m
  bool characterization_kept; // A p-characterized => A rem p^m p-characterized

  bool passed() const noexcept {
    return profiles_agree && coefficients_agree && characterization_kept;
  }
};

/// Requires A nonsingular and m > v_p(det A); throws PreconditionViolated
/// otherwise.
StabilityReport verify_rem_stability(const IntMatrix& a, Prime p, unsigned long m);

}  // namespace pcorr
