// pcorr: invariant factors vs. eigenvalue valuations at a prime.
//
//   pcorr analyze   FILE|- --prime P [--format text|json]
//   pcorr density   -p P -m M -n N [--convention all|det-filtered] [--threads T]
//                   [--budget B] [--format text|csv|json]
//   pcorr transform FILE|- --prime P [--bound N] [--seed S] [--max-attempts K]
//   pcorr verify    --suite NAME|all [--p P --m M --n N] [--seed S] [--trials T]
//
// Exit codes: analyze returns 0 when the matrix is p-correspondent and 1 when
// it is not; every other command returns 0 on success; 2 means an error.

#include "pcorr/classify.hpp"
#include "pcorr/density.hpp"
#include "pcorr/matrix_io.hpp"
#include "pcorr/serialize.hpp"
#include "pcorr/transform.hpp"
#include "pcorr/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

namespace {

using namespace pcorr;

constexpr int kExitError = 2;

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join_rats(const std::vector<BigRat>& v) {
  std::vector<std::string> s;
  for (const auto& q : v) s.push_back(q.get_den() == 1 ? q.get_num().get_str() : rat_to_string(q));
  return join(s);
}

unsigned default_threads() {
  if (const char* env = std::getenv("PCORR_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_report_text(const ClassificationReport& rep, std::ostream& os) {
  os << "prime:               " << rep.p.value() << '\n'
     << "rank:                " << rep.rank << '\n'
     << "invariant factors:   " << join(rep.invariant_factors) << '\n'
     << "v_p(f_i):            " << join(rep.f_vals) << '\n'
     << "v_p(Delta_i):        " << join(rep.delta_vals) << '\n'
     << "local Smith profile: " << join(rep.profile.e) << '\n';
  os << "Newton slopes:       ";
  if (rep.polygon) {
    std::vector<std::string> segs;
    for (const auto& s : rep.polygon->segments) {
      segs.push_back(rat_to_string(s.slope) + " x" + std::to_string(s.length));
    }
    os << join(segs);
  } else {
    os << "(none)";
  }
  os << '\n'
     << "eigenvalue vals:     " << join_rats(rep.eig_vals.values)
     << (rep.eig_vals.zero_count ? " (+" + std::to_string(rep.eig_vals.zero_count) + " zero)"
                                 : std::string())
     << '\n'
     << "degenerate:          " << std::boolalpha << rep.degenerate << '\n'
     << "p-characterized:     " << rep.p_characterized << '\n'
     << "p-correspondent:     " << rep.p_correspondent << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant factors vs. eigenvalue valuations at a prime"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  unsigned long analyze_prime = 0;
  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Classify one matrix at a prime");
  analyze->add_option("input", analyze_path, "Matrix file, or - for stdin")->required();
  analyze->add_option("-p,--prime", analyze_prime, "Prime")->required();
  analyze->add_option("-f,--format", analyze_format)->check(CLI::IsMember({"text", "json"}));

  // density
  unsigned long density_prime = 0;
  unsigned density_m = 0;
  unsigned density_n = 0;
  std::string density_convention = "all";
  unsigned density_threads = default_threads();
  std::string density_budget = pcorr::kDefaultBudget.get_str();
  std::string density_format = "text";
  auto* density = app.add_subcommand("density", "Exhaustive density of one (p, m, n) cell");
  density->add_option("-p,--prime", density_prime)->required();
  density->add_option("-m", density_m)->required();
  density->add_option("-n", density_n)->required();
  density->add_option("--convention", density_convention)
      ->check(CLI::IsMember({"all", "det-filtered"}));
  density->add_option("--threads", density_threads, "Worker threads (env PCORR_THREADS)");
  density->add_option("--budget", density_budget, "Maximum number of matrices to enumerate");
  density->add_option("-f,--format", density_format)
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // transform
  std::string transform_path;
  unsigned long transform_prime = 0;
  std::uint64_t transform_bound = 0;
  std::uint64_t transform_seed = 0;
  std::uint64_t transform_attempts = kDefaultMaxAttempts;
  std::string transform_format = "text";
  auto* transform = app.add_subcommand("transform", "Random U*A*V that is p-correspondent");
  transform->add_option("input", transform_path, "Matrix file, or - for stdin")->required();
  transform->add_option("-p,--prime", transform_prime)->required();
  transform->add_option("--bound", transform_bound, "Entry bound N (multiple of p; default p)");
  auto* seed_opt = transform->add_option("--seed", transform_seed);
  transform->add_option("--max-attempts", transform_attempts);
  transform->add_option("-f,--format", transform_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  std::string verify_suite;
  SuiteOptions verify_opts;
  unsigned long verify_p = 0;
  unsigned verify_m = 0;
  unsigned verify_n = 0;
  auto* verify = app.add_subcommand("verify", "Run built-in property suites");
  verify->add_option("--suite", verify_suite, "Suite name or 'all'")->required();
  auto* vp = verify->add_option("-p,--p,--prime", verify_p);
  auto* vm = verify->add_option("-m,--m", verify_m);
  auto* vn = verify->add_option("-n,--n", verify_n);
  verify->add_option("--seed", verify_opts.seed);
  verify->add_option("--trials", verify_opts.trials);
  verify->add_option("--threads", verify_opts.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*analyze) {
      const auto a = read_matrix(analyze_path);
      const auto rep = pcorr::analyze(a, Prime(analyze_prime));
      if (analyze_format == "json") {
        std::cout << to_json(rep).dump(2) << '\n';
      } else {
        print_report_text(rep, std::cout);
      }
      return rep.p_correspondent ? 0 : 1;
    }

    if (*density) {
      DensityOptions opts;
      opts.convention = parse_convention(density_convention);
      opts.threads = density_threads;
      opts.budget = BigInt(density_budget, 10);
      const auto row = enumerate_density(Prime(density_prime), density_m, density_n, opts);
      if (density_format == "csv") {
        std::cout << density_csv_header() << '\n' << density_csv_row(row) << '\n';
      } else if (density_format == "json") {
        std::cout << to_json(row).dump(2) << '\n';
      } else {
        std::cout << "p=" << row.p.value() << " m=" << row.m << " n=" << row.n
                  << " convention=" << to_string(row.convention) << '\n'
                  << "total " << row.total << ", p-characterized " << row.char_count
                  << ", p-correspondent " << row.corr_count << '\n'
                  << render_percent(row.char_fraction) << ','
                  << render_percent(row.corr_fraction) << ','
                  << (row.min_char_fraction ? render_percent(*row.min_char_fraction) : "-")
                  << '\n';
      }
      return 0;
    }

    if (*transform) {
      const Prime p(transform_prime);
      if (!*seed_opt) {
        transform_seed = std::random_device{}();
        std::cerr << "pcorr: no --seed given, using seed " << transform_seed << '\n';
      }
      const auto a = read_matrix(transform_path);
      const auto bound = transform_bound ? transform_bound : p.value();
      try {
        const auto sample = sample_correspondent(a, p, bound, transform_attempts, transform_seed);
        if (transform_format == "json") {
          auto j = to_json(sample);
          j["seed"] = transform_seed;
          std::cout << j.dump(2) << '\n';
        } else {
          std::cout << "seed " << transform_seed << ", attempts " << sample.attempts << "\nU:\n"
                    << to_string(sample.left) << "V:\n"
                    << to_string(sample.right) << "U*A*V:\n"
                    << to_string(sample.result);
          print_report_text(sample.report, std::cout);
        }
        return 0;
      } catch (const AttemptsExhausted& e) {
        std::cerr << "pcorr: " << e.what() << '\n';
        if (e.last_report()) print_report_text(*e.last_report(), std::cerr);
        return kExitError;
      }
    }

    if (*verify) {
      if (*vp) verify_opts.p = verify_p;
      if (*vm) verify_opts.m = verify_m;
      if (*vn) verify_opts.n = verify_n;
      std::vector<std::string> names;
      if (verify_suite == "all") {
        names = suite_names();
      } else {
        names.push_back(verify_suite);
      }
      bool all_ok = true;
      for (const auto& name : names) {
        const auto r = run_suite(name, verify_opts);
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all_ok = all_ok && r.passed;
      }
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "pcorr: parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "pcorr: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
