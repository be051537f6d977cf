#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <ostream>

#include "polyeval/errors.hpp"
#include "polyeval/evaluators.hpp"
#include "polyeval/harness.hpp"
#include "polyeval/verify.hpp"

namespace polyeval::cli {
namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

double parse_real(const std::string& token) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidArgument("not a number: '" + token + "'");
  }
  return v;
}

// "<re>,<im>" or "<re>".
ComplexScalar parse_point(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.empty() || parts.size() > 2) {
    throw InvalidArgument("--z expects <re>,<im>");
  }
  return {parse_real(parts[0]), parts.size() == 2 ? parse_real(parts[1]) : 0.0};
}

// Plain integers or powers written as 2^k.
std::size_t parse_degree(const std::string& token) {
  const auto caret = token.find('^');
  auto parse_uint = [&](std::string_view t) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw InvalidArgument("bad degree '" + token + "'");
    }
    return v;
  };
  if (caret == std::string::npos) return parse_uint(token);
  const std::size_t base = parse_uint(std::string_view(token).substr(0, caret));
  const std::size_t exp = parse_uint(std::string_view(token).substr(caret + 1));
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) v *= base;
  return v;
}

std::string format_complex(const ComplexScalar& z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.re, z.im);
  return buf;
}

struct EvalArgs {
  std::string coeffs;
  std::string z;
  std::string algo;
  std::size_t s = 0;
  std::size_t p = 0;
};

struct BenchArgs {
  std::string family;
  std::uint64_t seed = 0;
  std::string degrees;
  std::string algos = "horner,goertzel,pema-horner,pema-goertzel";
  std::size_t p = 2;
  std::string out;
  unsigned threads = 1;
  std::string reference = "exact";
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const Polynomial poly = read_coefficient_file(a.coeffs);
  const ComplexScalar z = parse_point(a.z);
  const Algo algo = parse_algo(a.algo);

  EvalConfig cfg;
  if (a.s != 0) {
    cfg.split = FixedS{a.s};
  } else if (a.p != 0) {
    cfg.split = FixedP{a.p};
  }
  OpCounter ctr;
  const EvalOutcome result = evaluate(algo, poly, z, ctr, cfg);

  out << "value: " << format_complex(result.value) << '\n';
  out << "algo: " << to_string(algo) << '\n';
  out << "degree: " << poly.degree() << '\n';
  if (algo == Algo::pema_horner || algo == Algo::pema_goertzel) {
    const PemaPlan plan = pema_plan(poly.degree(), cfg.split);
    out << "plan: s=" << plan.s << " p=" << plan.p << " padded_degree=" << plan.padded_degree << '\n';
  }
  out << "real_mults: " << result.counts.real_mults << '\n';
  out << "real_adds: " << result.counts.real_adds << '\n';
  out << "complex_mults: " << result.counts.complex_mults << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  const CoefficientFamily family = parse_family(a.family, a.seed);
  std::vector<std::size_t> degrees;
  for (const auto& d : split_list(a.degrees)) degrees.push_back(parse_degree(d));
  std::vector<Algo> algos;
  for (const auto& name : split_list(a.algos)) algos.push_back(parse_algo(name));
  if (degrees.empty() || algos.empty()) {
    throw InvalidArgument("--degrees and --algos must be non-empty");
  }

  BenchmarkConfig cfg;
  cfg.split = FixedP{a.p};
  cfg.threads = a.threads;
  cfg.reference = a.reference == "rounded" ? ReferencePoint::rounded_point : ReferencePoint::exact_root;
  const auto records = run_benchmark(family, degrees, algos, cfg);
  emit_csv(records, a.out);

  char line[160];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-8s N=%-8zu %-14s error=%.4e  mults=%llu\n", r.family.c_str(), r.N,
                  std::string(to_string(r.algo)).c_str(), r.error, static_cast<unsigned long long>(r.complex_mults));
    out << line;
  }
  out << "wrote " << records.size() << " records to " << a.out << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial evaluation by Horner, Goertzel and PEMA", "polyeval"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at one point");
  eval->add_option("--coeffs", eval_args.coeffs, "Coefficient file, a_0 first")->required();
  eval->add_option("--z", eval_args.z, "Evaluation point <re>,<im>")->required();
  eval->add_option("--algo", eval_args.algo, "horner | goertzel | pema-horner | pema-goertzel")->required();
  auto* s_opt = eval->add_option("--s", eval_args.s, "PEMA split radix (fixed s)")->check(CLI::Range(2, 1 << 30));
  auto* p_opt = eval->add_option("--p", eval_args.p, "PEMA split depth (fixed p)")->check(CLI::Range(1, 64));
  s_opt->excludes(p_opt);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the relative-error benchmark and write CSV");
  bench->add_option("--family", bench_args.family, "random | trig | sqrt | file:<path>")->required();
  bench->add_option("--seed", bench_args.seed, "Seed for the random family");
  bench->add_option("--degrees", bench_args.degrees, "Comma-separated degrees, e.g. 1024,2^12")->required();
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithm names");
  bench->add_option("--p", bench_args.p, "PEMA split depth")->check(CLI::Range(1, 64));
  bench->add_option("--out", bench_args.out, "CSV destination")->required();
  bench->add_option("--threads", bench_args.threads, "Worker threads")->check(CLI::Range(1, 256));
  bench->add_option("--reference", bench_args.reference, "Reference point: exact root or rounded z_k")
      ->check(CLI::IsMember({"exact", "rounded"}));

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run the invariant and oracle suite");
  verify->add_option("--max-degree", verify_opts.max_degree, "Largest degree exercised")->check(CLI::Range(2, 1 << 24));
  verify->add_flag("--large", verify_opts.large, "Add degrees 2^20 and 2^22 to the corpus");
  verify->add_option("--seed", verify_opts.seed, "Seed for randomized checks");
  verify->add_option("--threads", verify_opts.threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return run_eval(eval_args, out);
    if (*bench) return run_bench(bench_args, out);
    if (*verify) {
      const VerifyReport report = run_verification(verify_opts, out);
      out << (report.passed() ? "verify: all checks passed\n" : "verify: FAILED\n");
      return report.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyeval::cli
