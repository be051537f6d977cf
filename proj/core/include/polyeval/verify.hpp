#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polyeval {

struct VerifyOptions {
  std::size_t max_degree = std::size_t{1} << 18;
  // Adds 2^20 and 2^22 to the benchmark corpus.
  bool large = false;
  std::uint64_t seed = 20240611;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
};

/// Runs the invariant and oracle checks with problem sizes capped at
/// `max_degree`. Progress lines go to `log`.
VerifyReport run_verification(const VerifyOptions& options, std::ostream& log);

}  // namespace polyeval
