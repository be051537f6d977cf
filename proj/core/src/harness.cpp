#include "polyeval/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "polyeval/cheb_oracle.hpp"
#include "polyeval/errors.hpp"
#include "polyeval/reference.hpp"

namespace polyeval {
namespace {

constexpr std::array<std::size_t, 10> kTableIndices = {0, 1, 9, 99, 199, 256, 299, 399, 499, 699};

// 53 random bits scaled into [0, 1); independent of the standard library's
// distribution implementations.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view token, double& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

std::string CoefficientFamily::name() const {
  switch (kind) {
    case Kind::random:
      return "random";
    case Kind::trig:
      return "trig";
    case Kind::sqrt:
      return "sqrt";
    case Kind::file:
      return "file:" + path.string();
  }
  return "unknown";
}

CoefficientFamily parse_family(std::string_view spec, std::uint64_t seed) {
  if (spec == "random") return CoefficientFamily::random(seed);
  if (spec == "trig") return CoefficientFamily::trig();
  if (spec == "sqrt") return CoefficientFamily::sqrt();
  if (spec.starts_with("file:") && spec.size() > 5) {
    return CoefficientFamily::file(std::filesystem::path(spec.substr(5)));
  }
  throw InvalidArgument("unknown coefficient family '" + std::string(spec) + "'");
}

Polynomial generate_coefficients(const CoefficientFamily& family, std::size_t degree) {
  std::vector<ComplexScalar> a(degree + 1);
  switch (family.kind) {
    case CoefficientFamily::Kind::random: {
      std::mt19937_64 rng(family.seed);
      for (auto& c : a) c = uniform01(rng);
      break;
    }
    case CoefficientFamily::Kind::trig:
      for (std::size_t k = 0; k <= degree; ++k) {
        const double t = 0.001 * static_cast<double>(k);
        a[k] = std::sin(t) + std::sin(100.0 * t) + std::sin(1000.0 * t);
      }
      break;
    case CoefficientFamily::Kind::sqrt:
      for (std::size_t k = 0; k <= degree; ++k) a[k] = std::sqrt(static_cast<double>(k));
      break;
    case CoefficientFamily::Kind::file: {
      const Polynomial full = read_coefficient_file(family.path);
      if (full.degree() < degree) {
        throw InvalidArgument(family.path.string() + " holds degree " + std::to_string(full.degree()) +
                              ", need " + std::to_string(degree));
      }
      std::copy_n(full.coeffs().begin(), degree + 1, a.begin());
      break;
    }
  }
  return Polynomial(std::move(a));
}

Polynomial parse_coefficients(std::istream& in, std::string_view source) {
  std::vector<ComplexScalar> coeffs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < body.size()) {
      const auto start = body.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto end = std::min(body.find_first_of(" \t", start), body.size());
      tokens.push_back(body.substr(start, end - start));
      pos = end;
    }
    double re = 0.0;
    double im = 0.0;
    const bool ok = (tokens.size() == 1 || tokens.size() == 2) && parse_double(tokens[0], re) &&
                    (tokens.size() == 1 || parse_double(tokens[1], im));
    if (!ok) {
      throw InvalidArgument(std::string(source) + ":" + std::to_string(line_no) +
                            ": expected '<re>' or '<re> <im>'");
    }
    coeffs.emplace_back(re, im);
  }
  if (coeffs.empty()) {
    throw InvalidArgument(std::string(source) + ": no coefficients");
  }
  return Polynomial(std::move(coeffs));
}

Polynomial read_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open coefficient file " + path.string());
  }
  return parse_coefficients(in, path.string());
}

std::vector<ComplexScalar> unit_circle_points(std::size_t degree, std::span<const std::size_t> indices) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(degree + 1);
  std::vector<ComplexScalar> points;
  points.reserve(indices.size());
  for (std::size_t k : indices) {
    if (k > degree) {
      throw IndexOutOfRange("point index " + std::to_string(k) + " exceeds degree " + std::to_string(degree));
    }
    const double angle = static_cast<double>(k) * step;
    points.emplace_back(std::cos(angle), -std::sin(angle));
  }
  return points;
}

std::vector<std::size_t> default_indices(std::size_t degree) {
  std::vector<std::size_t> out;
  for (std::size_t k : kTableIndices) {
    if (k <= degree) out.push_back(k);
  }
  return out;
}

std::vector<ExperimentRecord> run_benchmark(const CoefficientFamily& family, std::span<const std::size_t> degrees,
                                            std::span<const Algo> algos, const BenchmarkConfig& config) {
  if (degrees.empty()) throw InvalidArgument("run_benchmark needs at least one degree");
  if (algos.empty()) throw InvalidArgument("run_benchmark needs at least one algorithm");

  using Clock = std::chrono::steady_clock;
  EvalConfig eval_config;
  eval_config.split = config.split;

  std::vector<ExperimentRecord> records;
  for (std::size_t N : degrees) {
    const Polynomial poly = generate_coefficients(family, N);
    const auto indices = default_indices(N);
    const auto points = unit_circle_points(N, indices);
    const PemaPlan plan = pema_plan(N, config.split);

    // Reference values and, for exact roots, the first-order cost of
    // representing omega^k by z_k.
    std::vector<ComplexScalar> ref(points.size());
    std::vector<double> point_terms(points.size(), 0.0);
    const Polynomial derivative = poly.derivative();
    parallel_for(points.size(), config.threads, [&](std::size_t i) {
      if (config.reference == ReferencePoint::rounded_point) {
        ref[i] = reference_eval(poly, points[i]);
        return;
      }
      const ExtendedComplex root = exact_unit_root(N, indices[i]);
      ref[i] = reference_eval_extended(poly, root).to_working();
      const DoubleDouble shift = abs(root - ExtendedComplex(points[i]));
      point_terms[i] = (shift * abs(reference_eval_extended(derivative, root))).to_double();
    });
    double ref_norm2 = 0.0;
    for (const auto& r : ref) ref_norm2 += r.re * r.re + r.im * r.im;

    for (Algo algo : algos) {
      const bool is_pema = algo == Algo::pema_horner || algo == Algo::pema_goertzel;
      std::vector<ComplexScalar> y(points.size());
      std::vector<OpCounter> counts(points.size());
      const auto start = Clock::now();
      parallel_for(points.size(), config.threads, [&](std::size_t i) {
        y[i] = evaluate(algo, poly, points[i], counts[i], eval_config).value;
      });
      const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

      std::vector<double> bounds(points.size());
      parallel_for(points.size(), config.threads, [&](std::size_t i) {
        bounds[i] = forward_error_bound(algo, poly, points[i], is_pema ? &plan : nullptr) + point_terms[i];
      });
      double bound2 = 0.0;
      for (double b : bounds) bound2 += b * b;

      ExperimentRecord rec;
      rec.family = family.name();
      rec.N = N;
      rec.algo = algo;
      rec.s = is_pema ? plan.s : 0;
      rec.p = is_pema ? plan.p : 0;
      rec.error = relative_error(y, ref);
      rec.elapsed_s = elapsed;
      rec.complex_mults = counts.front().complex_mults;
      rec.bound = std::sqrt(bound2 / ref_norm2);
      records.push_back(std::move(rec));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const ExperimentRecord& a, const ExperimentRecord& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.N != b.N) return a.N < b.N;
    return static_cast<int>(a.algo) < static_cast<int>(b.algo);
  });
  return records;
}

void write_csv(std::span<const ExperimentRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  std::array<char, 64> err{};
  std::array<char, 64> elapsed{};
  for (const auto& r : records) {
    std::snprintf(err.data(), err.size(), "%.6e", r.error);
    std::snprintf(elapsed.data(), elapsed.size(), "%.6f", r.elapsed_s);
    out << r.family << ',' << r.N << ',' << to_string(r.algo) << ',' << r.s << ',' << r.p << ',' << err.data()
        << ',' << elapsed.data() << ',' << r.complex_mults << '\n';
  }
}

void emit_csv(std::span<const ExperimentRecord> records, const std::filesystem::path& destination) {
  if (records.empty()) {
    throw InvalidArgument("emit_csv needs at least one record");
  }
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + destination.string());
  }
  write_csv(records, out);
  out.flush();
  if (!out) {
    throw IoError("write to " + destination.string() + " failed");
  }
}

}  // namespace polyeval
