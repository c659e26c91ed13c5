#include "pcorr/verify.hpp"

#include "pcorr/classify.hpp"
#include "pcorr/transform.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace pcorr {

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix a(n);
  for (auto& e : a.entries()) e = d(rng);
  return a;
}

SuiteResult theorem1(const SuiteOptions& o) {
  const Prime p(o.p.value_or(2));
  const unsigned m = o.m.value_or(1);
  const unsigned n = o.n.value_or(2);
  std::ostringstream os;
  try {
    const auto row = enumerate_density(p, m, n, {Convention::All, o.threads, o.budget});
    os << "p=" << p.value() << " m=" << m << " n=" << n << ": " << row.enumerated
       << " matrices, " << row.char_count << " p-characterized, " << row.corr_count
       << " p-correspondent, 0 violations";
    return {"theorem1", true, os.str()};
  } catch (const std::logic_error& e) {
    return {"theorem1", false, e.what()};
  }
}

SuiteResult gl_ratio(const SuiteOptions&) {
  std::ostringstream os;
  std::size_t cases = 0;
  std::size_t brute = 0;
  for (unsigned long pv : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    for (unsigned m = 1; m <= 3; ++m) {
      for (unsigned n = 1; n <= 4; ++n) {
        const auto gl = gl_count(Prime(pv), m, n);
        ++cases;
        if (!gl.below_four) {
          os << "ratio " << rat_to_string(gl.ratio) << " >= 4 at p=" << pv << " m=" << m
             << " n=" << n;
          return {"gl-ratio", false, os.str()};
        }
        if (gl.exhaustive) {
          ++brute;
          if (*gl.exhaustive != gl.gl_order) {
            os << "closed form " << gl.gl_order << " != brute force " << *gl.exhaustive
               << " at p=" << pv << " m=" << m << " n=" << n;
            return {"gl-ratio", false, os.str()};
          }
        }
      }
    }
  }
  os << cases << " (p,m,n) cases below 4, " << brute << " cross-checked exhaustively";
  return {"gl-ratio", true, os.str()};
}

SuiteResult oracles(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uint64_t cp_bad = 0;
  std::uint64_t delta_bad = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_matrix(rng, dim(rng), -100, 100);
    if (char_poly(a) != char_poly_minor_oracle(a)) ++cp_bad;
    if (determinantal_divisors_by_minors(a) != smith_form(a).dets) ++delta_bad;
  }
  std::ostringstream os;
  os << o.trials << " random matrices: " << cp_bad << " char-poly mismatches, " << delta_bad
     << " determinantal-divisor mismatches";
  return {"oracles", cp_bad == 0 && delta_bad == 0, os.str()};
}

SuiteResult smith_suite(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_matrix(rng, dim(rng), -1000000, 1000000);
    const auto s = smith_form(a, true);
    const auto& inv = s.invariant_factors;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
      if (sgn(inv[i]) < 0 || !mpz_divisible_p(inv[i + 1].get_mpz_t(), inv[i].get_mpz_t())) {
        ok = false;
      }
    }
    const auto& tr = *s.transforms;
    if (tr.left * a * tr.right != IntMatrix::diagonal(inv)) ok = false;
    if (abs(det(tr.left)) != 1 || abs(det(tr.right)) != 1) ok = false;
    if (s.rank() != rank(a)) ok = false;
    bad += !ok;
  }
  std::ostringstream os;
  os << o.trials << " random matrices: " << bad << " Smith form violations";
  return {"smith", bad == 0, os.str()};
}

SuiteResult newton_suite(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> deg(1, 5);
  std::uniform_int_distribution<int> prime_pick(0, 2);
  std::uniform_int_distribution<long> unit(1, 20);
  std::uniform_int_distribution<unsigned> power(0, 3);
  const unsigned long primes[] = {2, 3, 5};
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const Prime p(primes[prime_pick(rng)]);
    // f = prod (x - c_k p^{k_k}) with c_k coprime to p
    const std::size_t d = deg(rng);
    std::vector<BigInt> poly{1};  // descending powers
    std::vector<BigRat> expected;
    for (std::size_t k = 0; k < d; ++k) {
      long c = unit(rng);
      while (c % static_cast<long>(p.value()) == 0) ++c;
      const unsigned e = power(rng);
      const BigInt root = BigInt(c) * prime_power(p, e);
      expected.emplace_back(static_cast<long>(e));
      std::vector<BigInt> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= root * poly[i];
      }
      poly.swap(next);
    }
    std::sort(expected.begin(), expected.end());
    const CharPoly f{std::vector<BigInt>(poly.begin() + 1, poly.end())};
    const auto ev = eigenvalue_valuations(companion(f), p);
    if (ev.values != expected || ev.zero_count != 0) ++bad;
  }
  std::ostringstream os;
  os << o.trials << " companion round trips: " << bad << " mismatches";
  return {"newton", bad == 0, os.str()};
}

SuiteResult rem_stability(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  const unsigned long primes[] = {2, 3, 5};
  std::uint64_t bad = 0;
  std::uint64_t done = 0;
  for (std::uint64_t t = 0; done < o.trials; ++t) {
    const Prime p(primes[t % 3]);
    const auto a = random_matrix(rng, dim(rng), -50, 50);
    const BigInt d = det(a);
    if (sgn(d) == 0) continue;
    const auto m = static_cast<unsigned long>(val_p_finite(d, p) + 1);
    bad += !verify_rem_stability(a, p, m).passed();
    ++done;
  }
  std::ostringstream os;
  os << done << " random nonsingular matrices: " << bad << " violations";
  return {"rem-stability", bad == 0, os.str()};
}

SuiteResult orbit(const SuiteOptions& o) {
  struct Case {
    unsigned long p;
    unsigned m;
    std::vector<std::int64_t> e;
  };
  const Case cases[] = {{2, 1, {0, 0}}, {3, 1, {0, 0}}, {2, 2, {0, 1}}};
  std::ostringstream os;
  bool ok = true;
  for (const auto& c : cases) {
    const auto r = orbit_stabilizer_check(Prime(c.p), c.m, c.e, o.budget);
    os << "p=" << c.p << " m=" << c.m << " |S|=" << r.orbit_size << " |P_A|=" << r.min_pairs
       << (r.constant ? "" : "..") << (r.constant ? "" : std::to_string(r.max_pairs))
       << " expected " << r.expected_stabilizer << "; ";
    ok = ok && r.passed();
  }
  return {"orbit", ok, os.str()};
}

SuiteResult random_uv(const SuiteOptions& o) {
  const Prime p(o.p.value_or(101));
  const unsigned n = o.n.value_or(3);
  std::mt19937_64 rng(o.seed);
  std::uint64_t ok = 0;
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const auto a = random_matrix(rng, n, -100, 100);
    try {
      sample_correspondent(a, p, p.value(), 1, o.seed + t);
      ++ok;
    } catch (const AttemptsExhausted&) {
    }
  }
  const double eps = static_cast<double>(n * n + 3 * n) / static_cast<double>(p.value());
  const double p0 = std::max(0.0, 1.0 - eps);
  const double sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(o.trials));
  const double rate = static_cast<double>(ok) / static_cast<double>(o.trials);
  std::ostringstream os;
  os << "single-attempt success " << ok << "/" << o.trials << " = " << rate
     << ", threshold 1-" << (n * n + 3 * n) << "/" << p.value() << "-3sigma = " << p0 - 3 * sigma;
  return {"random-uv", rate >= p0 - 3 * sigma, os.str()};
}

SuiteResult proot(const SuiteOptions& o) {
  std::ostringstream os;
  bool ok = true;
  auto run = [&](const char* label, const Polynomial& g, unsigned long p, unsigned ell) {
    const auto r = proot_count_check(g, Prime(p), ell, o.budget);
    os << label << ": " << r.roots << " <= " << r.bound << "; ";
    ok = ok && r.holds;
  };
  run("x1 p=3 l=2", Polynomial(1).add_term(1, {1}), 3, 2);
  run("x1x2-1 p=5", Polynomial(2).add_term(1, {1, 1}).add_term(-1, {0, 0}), 5, 1);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coeff(-20, 20);
  for (int k = 0; k < 20; ++k) {
    Polynomial g(2);
    for (unsigned i = 0; i <= 3; ++i) {
      for (unsigned j = 0; i + j <= 3; ++j) g.add_term(coeff(rng), {i, j});
    }
    g.add_term(1, {3, 0});
    if (g.vanishes_mod(Prime(7))) continue;
    run("random cubic p=7 l=2", g, 7, 2);
  }
  return {"proot", ok, os.str()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1",      "gl-ratio", "oracles",
                                              "smith",         "newton",   "rem-stability",
                                              "orbit",         "random-uv",  "proot"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "theorem1") return theorem1(options);
  if (name == "gl-ratio") return gl_ratio(options);
  if (name == "oracles") return oracles(options);
  if (name == "smith") return smith_suite(options);
  if (name == "newton") return newton_suite(options);
  if (name == "rem-stability") return rem_stability(options);
  if (name == "orbit") return orbit(options);
  if (name == "random-uv") return random_uv(options);
  if (name == "proot") return proot(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace pcorr
