#include "pcorr/classify.hpp"

#include <stdexcept>

namespace pcorr {

ClassificationReport analyze(const IntMatrix& a, Prime p) {
  return analyze(a, smith_form(a), p);
}

ClassificationReport analyze(const IntMatrix& a, const SmithData& smith, Prime p) {
  ClassificationReport rep{p, smith.rank(), smith.invariant_factors, char_poly(a), {}, {},
                           local_profile(smith, p), std::nullopt, {}, false, false, false};
  const std::size_t r = rep.rank;

  rep.f_vals.reserve(r);
  rep.delta_vals.reserve(r);
  bool characterized = true;
  for (std::size_t i = 1; i <= r; ++i) {
    rep.f_vals.push_back(val_p(rep.charpoly.f(i), p));
    rep.delta_vals.push_back(val_p(smith.dets[i - 1], p));
    if (rep.f_vals.back() != rep.delta_vals.back()) characterized = false;
  }
  rep.p_characterized = characterized;

  const std::size_t tail = rep.charpoly.last_nonzero();
  rep.eig_vals.zero_count = rep.charpoly.degree() - tail;
  if (tail > 0) {
    rep.polygon = newton_polygon(rep.charpoly, p);
    for (const auto& seg : rep.polygon->segments) {
      for (std::int64_t k = 0; k < seg.length; ++k) rep.eig_vals.values.push_back(seg.slope);
    }
  }

  // f_i = 0 beyond the rank, so tail <= r always.
  rep.degenerate = tail < r;
  if (rep.degenerate) {
    rep.p_correspondent = false;
  } else {
    bool same = true;
    for (std::size_t i = 0; i < r && same; ++i) {
      same = rep.eig_vals.values[i] == rep.profile.e[i];
    }
    rep.p_correspondent = same;
  }

  if (rep.p_characterized && !rep.p_correspondent) {
    throw std::logic_error("p-characterized matrix is not p-correspondent");
  }
  return rep;
}

Verdict is_p_characterized(const IntMatrix& a, Prime p) {
  auto rep = analyze(a, p);
  const bool v = rep.p_characterized;
  return {v, std::move(rep)};
}

Verdict is_p_correspondent(const IntMatrix& a, Prime p) {
  auto rep = analyze(a, p);
  const bool v = rep.p_correspondent;
  return {v, std::move(rep)};
}

}  // namespace pcorr
