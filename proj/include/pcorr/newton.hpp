#pragma once

#include "pcorr/charpoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pcorr {

class EmptyPolygon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct NewtonPoint {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
};

struct NewtonSegment {
  BigRat slope;
  std::int64_t length;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of {(0, 0)} and {(i, v_p(f_i)) : f_i != 0}.
///
/// Vertices have strictly increasing x; segment slopes strictly increase and
/// their lengths sum to the index of the last nonzero coefficient.
struct NewtonPolygon {
  std::vector<NewtonPoint> points;
  std::vector<NewtonPoint> vertices;
  std::vector<NewtonSegment> segments;
};

/// Valuations of the nonzero eigenvalues (sorted, with multiplicity) plus the
/// count of zero eigenvalues; values.size() + zero_count equals n.
struct EigenvalueValuations {
  std::vector<BigRat> values;
  std::size_t zero_count = 0;

  friend bool operator==(const EigenvalueValuations&, const EigenvalueValuations&) = default;
};

/// Throws EmptyPolygon if every coefficient is zero. Trailing zero
/// coefficients are dropped, which is the same as taking the polygon of the
/// truncation x^{r'} + f_1 x^{r'-1} + ... + f_{r'}.
NewtonPolygon newton_polygon(const CharPoly& f, Prime p);

EigenvalueValuations eigenvalue_valuations(const CharPoly& f, Prime p);
EigenvalueValuations eigenvalue_valuations(const IntMatrix& a, Prime p);

}  // namespace pcorr
