#include "pcorr/transform.hpp"

#include <random>

namespace pcorr {

SmithEquivalent smith_equivalent(const IntMatrix& a) {
  auto data = smith_form(a, /*want_transforms=*/true);
  auto& t = *data.transforms;
  return {std::move(t.left), std::move(t.right), IntMatrix::diagonal(data.invariant_factors)};
}

AttemptsExhausted::AttemptsExhausted(std::uint64_t attempts,
                                     std::optional<ClassificationReport> last)
    : std::runtime_error("no p-characterized U*A*V found after " + std::to_string(attempts) +
                         " attempts"),
      attempts_(attempts),
      last_(std::move(last)) {}

std::optional<TransformSample> try_candidate(const IntMatrix& a, Prime p, const IntMatrix& u,
                                             const IntMatrix& v, std::uint64_t bound,
                                             std::optional<ClassificationReport>* last) {
  if (det_mod(u, p) == 0 || det_mod(v, p) == 0) return std::nullopt;
  IntMatrix product = u * a * v;
  auto report = analyze(product, p);
  if (!report.p_characterized) {
    if (last) *last = std::move(report);
    return std::nullopt;
  }
  if (last) *last = report;
  return TransformSample{u, v, bound, 1, std::move(product), std::move(report)};
}

TransformSample sample_correspondent(const IntMatrix& a, Prime p, std::uint64_t bound,
                                     std::uint64_t max_attempts, std::uint64_t seed) {
  if (bound < p.value() || bound % p.value() != 0) {
    throw std::invalid_argument("bound N must be a positive multiple of p, got " +
                                std::to_string(bound));
  }
  if (max_attempts == 0) throw std::invalid_argument("max_attempts must be >= 1");

  const std::size_t n = a.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> entry(0, bound - 1);
  auto draw = [&] {
    IntMatrix m(n);
    for (auto& e : m.entries()) e = static_cast<unsigned long>(entry(rng));
    return m;
  };

  std::optional<ClassificationReport> last;
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    IntMatrix u = draw();
    IntMatrix v = draw();
    if (auto hit = try_candidate(a, p, u, v, bound, &last)) {
      hit->attempts = attempt;
      return std::move(*hit);
    }
  }
  throw AttemptsExhausted(max_attempts, std::move(last));
}

StabilityReport verify_rem_stability(const IntMatrix& a, Prime p, unsigned long m) {
  if (m == 0) throw PreconditionViolated("m must be >= 1");
  const BigInt d = det(a);
  if (sgn(d) == 0) throw PreconditionViolated("rem-stability requires a nonsingular matrix");
  const auto vdet = val_p_finite(d, p);
  if (static_cast<std::int64_t>(m) <= vdet) {
    throw PreconditionViolated("m = " + std::to_string(m) + " must exceed v_p(det A) = " +
                               std::to_string(vdet));
  }

  IntMatrix reduced = rem_pm(a, p, m);
  const auto rep = analyze(a, p);
  const auto red = analyze(reduced, p);

  StabilityReport out{p,
                      m,
                      std::move(reduced),
                      rep.profile,
                      red.profile,
                      rep.f_vals,
                      red.f_vals,
                      rep.p_characterized,
                      red.p_characterized,
                      rep.profile == red.profile,
                      true,
                      !rep.p_characterized || red.p_characterized};
  // Both are nonsingular (det is preserved mod p^m), so both lists have length n.
  for (std::size_t i = 0; i < rep.f_vals.size(); ++i) {
    const auto& k = rep.f_vals[i];
    if (k.is_finite() && k.value() < static_cast<std::int64_t>(m)) {
      if (i >= red.f_vals.size() || red.f_vals[i] != k) out.coefficients_agree = false;
    }
  }
  return out;
}

}  // namespace pcorr
