#include "pcorr/density.hpp"

#include "pcorr/classify.hpp"

#include <algorithm>
#include <thread>

namespace pcorr {

Convention parse_convention(const std::string& name) {
  if (name == "all") return Convention::All;
  if (name == "det-filtered") return Convention::DetFiltered;
  throw std::invalid_argument("unknown convention '" + name + "' (expected all|det-filtered)");
}

std::string to_string(Convention c) {
  return c == Convention::All ? "all" : "det-filtered";
}

std::string render_percent(const BigRat& fraction) {
  if (sgn(fraction) < 0) throw std::invalid_argument("negative fraction");
  // floor(10000 * q + 1/2) hundredths of a percent
  BigRat scaled = fraction * 10000 + BigRat(1, 2);
  BigInt hundredths;
  mpz_fdiv_q(hundredths.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const BigInt whole = hundredths / 100;
  const BigInt frac = hundredths % 100;
  std::string tail = frac.get_str();
  if (tail.size() < 2) tail.insert(0, 2 - tail.size(), '0');
  return whole.get_str() + "." + tail;
}

namespace {

std::uint64_t checked_count(const BigInt& radix, unsigned long digits, const BigInt& budget,
                            const std::string& what) {
  BigInt count;
  mpz_pow_ui(count.get_mpz_t(), radix.get_mpz_t(), digits);
  if (count > budget) {
    throw BudgetExceeded(what + " needs " + count.get_str() + " evaluations, budget is " +
                         budget.get_str());
  }
  if (!count.fits_ulong_p()) throw BudgetExceeded(what + " count does not fit 64 bits");
  return count.get_ui();
}

// Odometer over [0, radix)^digits, least significant digit last.
void decode(std::uint64_t index, std::uint64_t radix, std::vector<std::uint64_t>& digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = index % radix;
    index /= radix;
  }
}

std::uint64_t encode(const std::vector<std::uint64_t>& digits, std::uint64_t radix) {
  std::uint64_t index = 0;
  for (auto d : digits) index = index * radix + d;
  return index;
}

void increment(std::vector<std::uint64_t>& digits, std::uint64_t radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix) return;
    digits[k] = 0;
  }
}

struct Tally {
  std::uint64_t enumerated = 0;
  std::uint64_t det_filtered = 0;
  std::uint64_t char_all = 0;
  std::uint64_t corr_all = 0;
  std::uint64_t char_filtered = 0;
  std::uint64_t corr_filtered = 0;
  std::map<std::vector<std::int64_t>, PartitionStats> partitions;
  std::map<std::vector<std::int64_t>, PartitionStats> classes;

  void merge(const Tally& o) {
    enumerated += o.enumerated;
    det_filtered += o.det_filtered;
    char_all += o.char_all;
    corr_all += o.corr_all;
    char_filtered += o.char_filtered;
    corr_filtered += o.corr_filtered;
    for (const auto& [key, stats] : o.partitions) {
      auto& mine = partitions[key];
      mine.size += stats.size;
      mine.char_count += stats.char_count;
    }
    for (const auto& [key, stats] : o.classes) {
      auto& mine = classes[key];
      mine.size += stats.size;
      mine.char_count += stats.char_count;
    }
  }
};

Tally tally_range(Prime p, unsigned m, unsigned n, std::uint64_t radix, std::uint64_t begin,
                  std::uint64_t end) {
  Tally t;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n) * n);
  decode(begin, radix, digits);
  IntMatrix a(n);
  for (std::uint64_t idx = begin; idx < end; ++idx, increment(digits, radix)) {
    for (std::size_t k = 0; k < digits.size(); ++k) {
      a.entries()[k] = static_cast<unsigned long>(digits[k]);
    }
    const auto rep = analyze(a, p);
    ++t.enumerated;
    t.char_all += rep.p_characterized;
    t.corr_all += rep.p_correspondent;
    auto& cls = t.classes[rep.profile.e];
    ++cls.size;
    cls.char_count += rep.p_characterized;
    if (rep.rank == n && rep.profile.total() < static_cast<std::int64_t>(m)) {
      ++t.det_filtered;
      t.char_filtered += rep.p_characterized;
      t.corr_filtered += rep.p_correspondent;
      auto& part = t.partitions[rep.profile.e];
      ++part.size;
      part.char_count += rep.p_characterized;
    }
  }
  return t;
}

}  // namespace

DensityRow enumerate_density(Prime p, unsigned m, unsigned n, const DensityOptions& options) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be >= 1");
  const BigInt modulus = prime_power(p, m);
  const std::uint64_t total =
      checked_count(modulus, static_cast<unsigned long>(n) * n, options.budget, "enumeration");
  const std::uint64_t radix = modulus.get_ui();

  const unsigned threads =
      std::max(1u, static_cast<unsigned>(std::min<std::uint64_t>(options.threads, total)));
  std::vector<Tally> partial(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = total / threads * w + std::min<std::uint64_t>(w, total % threads);
      const std::uint64_t len = total / threads + (w < total % threads ? 1 : 0);
      workers.emplace_back([&, w, begin, len] {
        partial[w] = tally_range(p, m, n, radix, begin, begin + len);
      });
    }
  }
  Tally sum;
  for (const auto& t : partial) sum.merge(t);

  DensityRow row{p, m, n, options.convention};
  row.enumerated = sum.enumerated;
  row.det_filtered = sum.det_filtered;
  if (options.convention == Convention::All) {
    row.total = sum.enumerated;
    row.char_count = sum.char_all;
    row.corr_count = sum.corr_all;
  } else {
    row.total = sum.det_filtered;
    row.char_count = sum.char_filtered;
    row.corr_count = sum.corr_filtered;
  }
  if (row.char_count > row.corr_count) {
    throw std::logic_error("more p-characterized than p-correspondent matrices");
  }
  if (row.total > 0) {
    row.char_fraction = BigRat(BigInt(row.char_count), BigInt(row.total));
    row.corr_fraction = BigRat(BigInt(row.corr_count), BigInt(row.total));
    row.char_fraction.canonicalize();
    row.corr_fraction.canonicalize();
  }
  row.partitions = std::move(sum.partitions);
  row.profile_classes = std::move(sum.classes);
  for (const auto& [key, stats] : row.profile_classes) {
    if (stats.char_count == 0) continue;
    BigRat f(BigInt(stats.char_count), BigInt(stats.size));
    f.canonicalize();
    if (!row.min_char_fraction || f < *row.min_char_fraction) row.min_char_fraction = f;
  }
  return row;
}

namespace {

// Rank of a matrix mod p over F_p; entries are reduced first.
std::size_t rank_mod_p(std::vector<std::uint64_t> m, std::size_t n, std::uint64_t p) {
  for (auto& x : m) x %= p;
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * a % p);
      a = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * a % p);
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && m[piv * n + c] == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[r * n + j]);
    const std::uint64_t iv = inv(m[r * n + c]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const std::uint64_t f = m[i * n + c] * iv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] + (p - f) * m[r * n + j]) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

GlCount gl_count(Prime p, unsigned m, unsigned n, std::uint64_t exhaustive_limit) {
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be >= 1");
  const BigInt pb = p.big();
  const unsigned long nn = static_cast<unsigned long>(n) * n;
  BigInt pn;
  mpz_pow_ui(pn.get_mpz_t(), pb.get_mpz_t(), n);
  BigInt gl1 = 1;
  BigInt pi = 1;
  for (unsigned i = 0; i < n; ++i) {
    gl1 *= pn - pi;
    pi *= pb;
  }
  BigInt lift;
  mpz_pow_ui(lift.get_mpz_t(), pb.get_mpz_t(), (m - 1) * nn);
  GlCount out;
  out.gl_order = gl1 * lift;
  mpz_pow_ui(out.matrices.get_mpz_t(), pb.get_mpz_t(), m * nn);
  out.ratio = BigRat(out.matrices, out.gl_order);
  out.ratio.canonicalize();
  out.below_four = out.ratio < 4;

  if (out.matrices <= BigInt(static_cast<unsigned long>(exhaustive_limit))) {
    const std::uint64_t radix = prime_power(p, m).get_ui();
    const std::uint64_t total = out.matrices.get_ui();
    std::vector<std::uint64_t> digits(nn, 0);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx, increment(digits, radix)) {
      if (rank_mod_p(digits, n, p.value()) == n) ++count;
    }
    out.exhaustive = BigInt(static_cast<unsigned long>(count));
  }
  return out;
}

OrbitReport orbit_stabilizer_check(Prime p, unsigned m, const std::vector<std::int64_t>& e,
                                   const BigInt& budget) {
  const std::size_t n = e.size();
  if (n == 0 || m == 0) throw std::invalid_argument("need n >= 1 and m >= 1");
  if (!std::is_sorted(e.begin(), e.end()) || e.front() < 0) {
    throw std::invalid_argument("profile exponents must be non-negative and non-decreasing");
  }
  std::int64_t sum = 0;
  for (auto x : e) sum += x;
  if (static_cast<std::int64_t>(m) <= sum) {
    throw std::invalid_argument("orbit-stabilizer check requires m > sum(e)");
  }
  const BigInt modulus = prime_power(p, m);
  checked_count(modulus, 2 * n * n, budget, "pair enumeration");
  const std::uint64_t q = modulus.get_ui();
  const std::uint64_t cells = checked_count(modulus, n * n, budget, "matrix enumeration");

  OrbitReport out{p, m, e};

  // Membership in S_S^m by the local Smith profile over Z.
  std::vector<std::uint8_t> in_orbit(cells, 0);
  {
    std::vector<std::uint64_t> digits(n * n, 0);
    IntMatrix a(n);
    for (std::uint64_t idx = 0; idx < cells; ++idx, increment(digits, q)) {
      for (std::size_t k = 0; k < digits.size(); ++k) {
        a.entries()[k] = static_cast<unsigned long>(digits[k]);
      }
      if (local_profile(a, p).e == e) {
        in_orbit[idx] = 1;
        ++out.orbit_size;
      }
    }
  }

  if (q >= (std::uint64_t{1} << 32)) throw BudgetExceeded("modulus p^m too large for pair enumeration");
  // q < 2^32, so the products below are exact in 128-bit arithmetic.
  std::vector<std::uint64_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = prime_power(p, e[i]).get_ui() % q;
  std::vector<std::uint64_t> hits(cells, 0);
  std::vector<std::uint64_t> l(n * n, 0);
  std::vector<std::uint64_t> r(n * n, 0);
  std::vector<std::uint64_t> ls(n * n, 0);
  std::vector<std::uint64_t> prod(n * n, 0);
  for (std::uint64_t li = 0; li < cells; ++li, increment(l, q)) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) ls[i * n + j] = l[i * n + j] * s[j] % q;
    }
    std::fill(r.begin(), r.end(), 0);
    for (std::uint64_t ri = 0; ri < cells; ++ri, increment(r, q)) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          unsigned __int128 acc = 0;
          for (std::size_t k = 0; k < n; ++k) {
            acc += static_cast<unsigned __int128>(ls[i * n + k]) * r[k * n + j];
          }
          prod[i * n + j] = static_cast<std::uint64_t>(acc % q);
        }
      }
      ++hits[encode(prod, q)];
    }
  }

  out.gl_order = gl_count(p, m, static_cast<unsigned>(n), 0).gl_order;
  const BigInt gl_sq = out.gl_order * out.gl_order;
  bool first = true;
  BigInt landed = 0;
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    if (!in_orbit[idx]) continue;
    const auto h = hits[idx];
    landed += static_cast<unsigned long>(h);
    if (first) {
      out.min_pairs = out.max_pairs = h;
      first = false;
    } else {
      out.min_pairs = std::min(out.min_pairs, h);
      out.max_pairs = std::max(out.max_pairs, h);
    }
  }
  out.constant = out.orbit_size > 0 && out.min_pairs == out.max_pairs;
  if (out.orbit_size > 0 &&
      mpz_divisible_ui_p(gl_sq.get_mpz_t(), static_cast<unsigned long>(out.orbit_size))) {
    out.expected_stabilizer = gl_sq / static_cast<unsigned long>(out.orbit_size);
    out.matches_formula = out.constant &&
                          BigInt(static_cast<unsigned long>(out.min_pairs)) == out.expected_stabilizer &&
                          landed == gl_sq;
  }
  return out;
}

ProotReport proot_count_check(const Polynomial& g, Prime p, unsigned ell, const BigInt& budget) {
  if (ell == 0) throw std::invalid_argument("ell must be >= 1");
  if (g.vanishes_mod(p)) {
    throw std::invalid_argument("polynomial vanishes identically mod p");
  }
  const std::size_t vars = g.variables();
  const BigInt side = BigInt(static_cast<unsigned long>(ell)) * p.big();
  ProotReport out;
  out.points = checked_count(side, vars, budget, "p-root grid");
  const std::uint64_t radix = side.get_ui();
  std::vector<std::uint64_t> point(vars, 0);
  for (std::uint64_t idx = 0; idx < out.points; ++idx, increment(point, radix)) {
    if (g.evaluate_mod(point, p) == 0) ++out.roots;
  }
  BigInt ell_n, p_n1;
  mpz_ui_pow_ui(ell_n.get_mpz_t(), ell, vars);
  mpz_ui_pow_ui(p_n1.get_mpz_t(), p.value(), vars == 0 ? 0 : vars - 1);
  out.bound = ell_n * g.total_degree() * p_n1;
  out.holds = BigInt(static_cast<unsigned long>(out.roots)) <= out.bound;
  return out;
}

}  // namespace pcorr
