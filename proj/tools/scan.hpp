#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace detsum::cli {

enum class Kind { S, U, TAbs, TN, DeltaProfile, Census, NonResidue, Sift, DeMoment };

Kind parse_kind(std::string_view name);
std::string_view kind_name(Kind kind) noexcept;

/// Exit statuses of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInvariant = 3;

struct ScanConfig {
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> orders{2};
  std::vector<std::uint32_t> n_grid;
  std::vector<Kind> kinds;
  unsigned workers = 1;
  std::string out;  ///< empty: standard output, and no manifest
  std::uint64_t seed = 1;
  bool timing = true;  ///< false writes wall_ms = 0 for byte-stable output
  double x = 2.0;
  double y = 0.0;  ///< 0: use N
  int nu = 2;
  std::uint32_t max_table = 0;  ///< 0: DETSUM_MAX_TABLE or the library default
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primes in [lo, hi], odd only.
std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi);

/// Throws ValidationError naming the first offending parameter.
void validate(const ScanConfig& config);

/// Runs every requested computation and streams CSV rows to `csv`.
/// Diagnostics go to `log`. Returns one of the kExit* statuses.
int run(const ScanConfig& config, std::ostream& csv, std::ostream& log);

/// Opens config.out (or uses `fallback` when empty), runs, and writes the
/// manifest next to the output file.
int run_to_destination(const ScanConfig& config, std::ostream& fallback, std::ostream& log);

/// Measures the calibration grid and compares against `path` if present.
/// Writes the file unless a pinned constant grew by more than 5% (exit 3)
/// or check_only is set.
int calibrate(const std::string& path, bool check_only, std::ostream& log);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

}  // namespace detsum::cli
