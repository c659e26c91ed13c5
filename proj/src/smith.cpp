#include "pcorr/smith.hpp"

#include "combinations.hpp"

#include <numeric>
#include <utility>

namespace pcorr {

std::int64_t LocalSmithProfile::total() const noexcept {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state: the working matrix plus the accumulated unimodular
// transforms (only maintained when requested).
class SmithReducer {
 public:
  SmithReducer(const IntMatrix& a, bool track)
      : w_(a), n_(a.size()), track_(track) {
    if (track_) {
      p_.emplace(IntMatrix::identity(n_));
      q_.emplace(IntMatrix::identity(n_));
    }
  }

  void run() {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!select_trailing_pivot(k)) break;
      reduce_stage(k);
      if (sgn(w_(k, k)) < 0) negate_row(k);
    }
  }

  SmithData result() && {
    SmithData out;
    out.invariant_factors.reserve(n_);
    BigInt acc = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      out.invariant_factors.push_back(w_(i, i));
      if (sgn(w_(i, i)) != 0) {
        acc *= w_(i, i);
        out.dets.push_back(acc);
      }
    }
    if (track_) out.transforms = SmithTransforms{std::move(*p_), std::move(*q_)};
    return out;
  }

 private:
  // Smallest nonzero |entry| in the trailing block, ties in row-major order.
  bool select_trailing_pivot(std::size_t k) {
    std::size_t bi = n_, bj = n_;
    for (std::size_t i = k; i < n_; ++i) {
      for (std::size_t j = k; j < n_; ++j) {
        if (sgn(w_(i, j)) == 0) continue;
        if (bi == n_ || cmpabs(w_(i, j), w_(bi, bj)) < 0) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == n_) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }

  void reduce_stage(std::size_t k) {
    BigInt q;
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < n_; ++i) {
        if (sgn(w_(i, k)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w_(i, k).get_mpz_t(), w_(k, k).get_mpz_t());
        add_row_multiple(i, k, -q);
        if (sgn(w_(i, k)) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n_; ++j) {
        if (sgn(w_(k, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), w_(k, j).get_mpz_t(), w_(k, k).get_mpz_t());
        add_col_multiple(j, k, -q);
        if (sgn(w_(k, j)) != 0) clean = false;
      }
      if (!clean) {
        repivot_cross(k);
        continue;
      }
      // Row and column k are clear; enforce s_k | every trailing entry.
      if (!fix_divisibility(k)) return;
    }
  }

  // Brings the smallest nonzero entry of row k / column k onto the diagonal.
  void repivot_cross(std::size_t k) {
    std::size_t best_i = k, best_j = k;
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (sgn(w_(i, k)) != 0 && cmpabs(w_(i, k), w_(best_i, best_j)) < 0) {
        best_i = i;
        best_j = k;
      }
    }
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (sgn(w_(k, j)) != 0 && cmpabs(w_(k, j), w_(best_i, best_j)) < 0) {
        best_i = k;
        best_j = j;
      }
    }
    swap_rows(k, best_i);
    swap_cols(k, best_j);
  }

  bool fix_divisibility(std::size_t k) {
    for (std::size_t i = k + 1; i < n_; ++i) {
      for (std::size_t j = k + 1; j < n_; ++j) {
        if (!mpz_divisible_p(w_(i, j).get_mpz_t(), w_(k, k).get_mpz_t())) {
          add_row_multiple(k, i, BigInt(1));
          return true;
        }
      }
    }
    return false;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n_; ++j) std::swap(w_(a, j), w_(b, j));
    if (track_) {
      for (std::size_t j = 0; j < n_; ++j) std::swap((*p_)(a, j), (*p_)(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n_; ++i) std::swap(w_(i, a), w_(i, b));
    if (track_) {
      for (std::size_t i = 0; i < n_; ++i) std::swap((*q_)(i, a), (*q_)(i, b));
    }
  }

  // row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < n_; ++j) w_(dst, j) += c * w_(src, j);
    if (track_) {
      for (std::size_t j = 0; j < n_; ++j) (*p_)(dst, j) += c * (*p_)(src, j);
    }
  }

  // col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t i = 0; i < n_; ++i) w_(i, dst) += c * w_(i, src);
    if (track_) {
      for (std::size_t i = 0; i < n_; ++i) (*q_)(i, dst) += c * (*q_)(i, src);
    }
  }

  void negate_row(std::size_t k) {
    for (std::size_t j = 0; j < n_; ++j) w_(k, j) = -w_(k, j);
    if (track_) {
      for (std::size_t j = 0; j < n_; ++j) (*p_)(k, j) = -(*p_)(k, j);
    }
  }

  IntMatrix w_;
  std::size_t n_;
  bool track_;
  std::optional<IntMatrix> p_;
  std::optional<IntMatrix> q_;
};

}  // namespace

SmithData smith_form(const IntMatrix& a, bool want_transforms) {
  SmithReducer reducer(a, want_transforms);
  reducer.run();
  return std::move(reducer).result();
}

std::vector<BigInt> determinantal_divisors_by_minors(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n > 5) {
    throw UnsupportedSize("minor-GCD determinantal divisors limited to n <= 5, got n = " +
                          std::to_string(n));
  }
  std::vector<BigInt> out;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto subsets = detail::combinations(n, i);
    BigInt g = 0;
    for (const auto& rows : subsets) {
      for (const auto& cols : subsets) {
        const BigInt m = minor(a, rows, cols);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      }
    }
    if (sgn(g) == 0) break;
    out.push_back(g);
  }
  return out;
}

std::vector<BigInt> determinantal_divisors(const IntMatrix& a) {
  auto dets = smith_form(a).dets;
  if (a.size() <= 5 && determinantal_divisors_by_minors(a) != dets) {
    throw std::logic_error("determinantal divisors disagree between minor-GCD and SNF routes");
  }
  return dets;
}

LocalSmithProfile local_profile(const SmithData& smith, Prime p) {
  LocalSmithProfile out{p, {}};
  out.e.reserve(smith.rank());
  for (std::size_t i = 0; i < smith.rank(); ++i) {
    out.e.push_back(val_p_finite(smith.invariant_factors[i], p));
  }
  return out;
}

LocalSmithProfile local_profile(const IntMatrix& a, Prime p) {
  return local_profile(smith_form(a), p);
}

LocalSmithProfile smith_profile_mod_pm(const IntMatrix& a, Prime p, unsigned long m) {
  const auto full = local_profile(rem_pm(a, p, m), p);
  LocalSmithProfile out{p, {}};
  for (auto e : full.e) {
    if (e < static_cast<std::int64_t>(m)) out.e.push_back(e);
  }
  return out;
}

}  // namespace pcorr
