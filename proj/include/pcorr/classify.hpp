#pragma once

#include "pcorr/charpoly.hpp"
#include "pcorr/newton.hpp"
#include "pcorr/smith.hpp"

#include <optional>
#include <vector>

namespace pcorr {

/// Everything needed to see why a matrix is (or is not) p-characterized and
/// p-correspondent at one prime.
struct ClassificationReport {
  Prime p;
  std::size_t rank = 0;
  std::vector<BigInt> invariant_factors;
  CharPoly charpoly;
  std::vector<Valuation> f_vals;      // v_p(f_i), i = 1..rank
  std::vector<Valuation> delta_vals;  // v_p(Delta_i), i = 1..rank
  LocalSmithProfile profile;
  std::optional<NewtonPolygon> polygon;  // absent when the char poly is x^n
  EigenvalueValuations eig_vals;
  bool p_characterized = false;
  bool p_correspondent = false;
  /// Fewer nonzero eigenvalues than the rank; such a matrix is never
  /// p-correspondent.
  bool degenerate = false;
};

/// Builds the full report. Total on every square integer matrix; throws
/// std::logic_error only if a p-characterized matrix fails to be
/// p-correspondent, which would be an internal bug.
ClassificationReport analyze(const IntMatrix& a, Prime p);

/// Same as analyze() but reuses an already computed Smith form.
ClassificationReport analyze(const IntMatrix& a, const SmithData& smith, Prime p);

struct Verdict {
  bool value;
  ClassificationReport evidence;
  explicit operator bool() const noexcept { return value; }
};

/// v_p(f_i) = v_p(Delta_i) for every i in [1, rank]; vacuous at rank 0.
Verdict is_p_characterized(const IntMatrix& a, Prime p);

/// Sorted valuations of the nonzero eigenvalues equal the local Smith
/// profile; false whenever the matrix is degenerate; vacuous at rank 0.
Verdict is_p_correspondent(const IntMatrix& a, Prime p);

}  // namespace pcorr
