#include "pcorr/newton.hpp"

namespace pcorr {

namespace {

// > 0 iff o -> a -> b turns counter-clockwise.
std::int64_t cross(const NewtonPoint& o, const NewtonPoint& a, const NewtonPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

void check_hull(const NewtonPolygon& np) {
  for (std::size_t j = 1; j < np.segments.size(); ++j) {
    if (!(np.segments[j - 1].slope < np.segments[j].slope)) {
      throw std::logic_error("Newton polygon slopes not strictly increasing");
    }
  }
  for (std::size_t v = 1; v < np.vertices.size(); ++v) {
    const auto& a = np.vertices[v - 1];
    const auto& b = np.vertices[v];
    for (const auto& q : np.points) {
      if (q.x < a.x || q.x > b.x) continue;
      // q must lie on or above the line through a and b.
      if (cross(a, b, q) < 0) throw std::logic_error("point below Newton polygon");
    }
  }
}

}  // namespace

NewtonPolygon newton_polygon(const CharPoly& f, Prime p) {
  NewtonPolygon np;
  np.points.push_back({0, 0});
  for (std::size_t i = 1; i <= f.degree(); ++i) {
    if (sgn(f.f(i)) == 0) continue;
    np.points.push_back({static_cast<std::int64_t>(i), val_p_finite(f.f(i), p)});
  }
  if (np.points.size() == 1) {
    throw EmptyPolygon("Newton polygon of x^n has no segments (all coefficients zero)");
  }

  // Andrew's monotone chain, lower half; collinear interior points dropped.
  for (const auto& q : np.points) {
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), q) <= 0) {
      np.vertices.pop_back();
    }
    np.vertices.push_back(q);
  }
  for (std::size_t v = 1; v < np.vertices.size(); ++v) {
    const auto& a = np.vertices[v - 1];
    const auto& b = np.vertices[v];
    BigRat slope(BigInt(b.y - a.y), BigInt(b.x - a.x));
    slope.canonicalize();
    np.segments.push_back({std::move(slope), b.x - a.x});
  }
  check_hull(np);
  return np;
}

EigenvalueValuations eigenvalue_valuations(const CharPoly& f, Prime p) {
  EigenvalueValuations out;
  const std::size_t tail = f.last_nonzero();
  out.zero_count = f.degree() - tail;
  if (tail == 0) return out;
  const auto np = newton_polygon(f, p);
  for (const auto& seg : np.segments) {
    for (std::int64_t k = 0; k < seg.length; ++k) out.values.push_back(seg.slope);
  }
  return out;
}

EigenvalueValuations eigenvalue_valuations(const IntMatrix& a, Prime p) {
  return eigenvalue_valuations(char_poly(a), p);
}

}  // namespace pcorr
