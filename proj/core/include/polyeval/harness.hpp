#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyeval/evaluators.hpp"
#include "polyeval/polynomial.hpp"

namespace polyeval {

/// Coefficient generators for the error-growth experiments.
///   random: a_k uniform on [0, 1), seeded
///   trig:   a_k = sin t + sin 100t + sin 1000t at t = 0.001 k
///   sqrt:   a_k = sqrt(k)
///   file:   a_0..a_N read from a coefficient file
struct CoefficientFamily {
  enum class Kind { random, trig, sqrt, file };

  Kind kind = Kind::random;
  std::uint64_t seed = 0;
  std::filesystem::path path;

  static CoefficientFamily random(std::uint64_t seed) { return {Kind::random, seed, {}}; }
  static CoefficientFamily trig() { return {Kind::trig, 0, {}}; }
  static CoefficientFamily sqrt() { return {Kind::sqrt, 0, {}}; }
  static CoefficientFamily file(std::filesystem::path p) { return {Kind::file, 0, std::move(p)}; }

  [[nodiscard]] std::string name() const;
};

/// "random", "trig", "sqrt" or "file:<path>".
[[nodiscard]] CoefficientFamily parse_family(std::string_view spec, std::uint64_t seed = 0);

/// Coefficients a_0..a_N of `family`. File families need at least N+1 lines.
[[nodiscard]] Polynomial generate_coefficients(const CoefficientFamily& family, std::size_t degree);

/// One coefficient per line, "<re>" or "<re> <im>", a_0 first. Blank lines
/// and lines starting with '#' are skipped.
[[nodiscard]] Polynomial read_coefficient_file(const std::filesystem::path& path);
[[nodiscard]] Polynomial parse_coefficients(std::istream& in, std::string_view source = "<stream>");

/// z_k = cos(k t) - i sin(k t) with t = 2 pi / (N + 1), each point computed
/// independently from k t. Throws IndexOutOfRange for k > N.
[[nodiscard]] std::vector<ComplexScalar> unit_circle_points(std::size_t degree,
                                                            std::span<const std::size_t> indices);

/// {0, 1, 9, 99, 199, 256, 299, 399, 499, 699} restricted to k <= N.
[[nodiscard]] std::vector<std::size_t> default_indices(std::size_t degree);

struct ExperimentRecord {
  std::string family;
  std::size_t N = 0;
  Algo algo = Algo::horner;
  std::size_t s = 0;  // 0 for the non-PEMA algorithms
  std::size_t p = 0;
  double error = 0.0;
  double elapsed_s = 0.0;
  std::uint64_t complex_mults = 0;  // one evaluation
  // Forward error bound aggregated like `error`:
  // ||(bound_j)_j||_2 / ||y_ref||_2 over the point set. With an exact-root
  // reference each bound_j includes |z_k - omega^k| |w'(omega^k)|.
  double bound = 0.0;
};

/// Where the ground truth is evaluated.
///   exact_root:    at the exact root of unity exp(-2 pi i k/(N+1)); the
///                  error then includes the rounding of z_k itself, as an
///                  FFT-based reference would.
///   rounded_point: at the same binary64 point z_k the algorithms receive.
enum class ReferencePoint { exact_root, rounded_point };

struct BenchmarkConfig {
  FixedP split{2};
  unsigned threads = 1;
  ReferencePoint reference = ReferencePoint::exact_root;
};

/// Evaluates every (N, algo) pair at the default unit-circle points and
/// compares against the extended-precision reference. Records come back sorted by
/// (family, N, algo) and are deterministic given the family's seed.
[[nodiscard]] std::vector<ExperimentRecord> run_benchmark(const CoefficientFamily& family,
                                                          std::span<const std::size_t> degrees,
                                                          std::span<const Algo> algos,
                                                          const BenchmarkConfig& config = {});

inline constexpr std::string_view kCsvHeader = "family,N,algo,s,p,error,elapsed_s,complex_mults";

void write_csv(std::span<const ExperimentRecord> records, std::ostream& out);
/// Throws InvalidArgument for no records and IoError when the file cannot
/// be written.
void emit_csv(std::span<const ExperimentRecord> records, const std::filesystem::path& destination);

}  // namespace polyeval
