#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scan.hpp"

namespace {

std::vector<std::uint32_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw detsum::cli::ValidationError("--p-range expects LO:HI");
  const auto lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, colon)));
  const auto hi = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)));
  return detsum::cli::odd_primes_in(lo, hi);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace detsum::cli;

  CLI::App app{"Exact character sums with determinants, matrix square roots, and sifted sets"};
  app.require_subcommand(1);

  ScanConfig config;
  std::string p_range;
  std::vector<std::string> kinds;
  auto* scan = app.add_subcommand("scan", "Run computations and stream CSV rows");
  scan->add_option("--p", config.primes, "Primes (comma separated or repeated)")->delimiter(',');
  scan->add_option("--p-range", p_range, "All odd primes in LO:HI");
  scan->add_option("--order", config.orders, "Character orders d (divisors of p-1)")
      ->delimiter(',')
      ->capture_default_str();
  scan->add_option("--n-grid", config.n_grid, "Box sizes N (or X for nonresidue)")->delimiter(',');
  scan->add_option("--kind", kinds,
                   "s, u, t_abs, t_n, delta_profile, census, nonresidue, sift, de_moment")
      ->delimiter(',')
      ->required();
  scan->add_option("--workers", config.workers, "Worker threads (0 = hardware)")->capture_default_str();
  scan->add_option("--out", config.out, "CSV output path (default stdout)");
  scan->add_option("--seed", config.seed, "Seed for random weights")->capture_default_str();
  scan->add_option("--x", config.x, "Lower end of the sift window (x, y]")->capture_default_str();
  scan->add_option("--y", config.y, "Upper end of the sift window (default N)");
  scan->add_option("--nu", config.nu, "Moment exponent for de_moment")->capture_default_str();
  scan->add_option("--max-table", config.max_table, "Override the field table bound");
  bool no_timing = false;
  scan->add_flag("--no-timing", no_timing, "Write wall_ms = 0 for byte-stable output");

  std::string calibration_file = "data/calibration.txt";
  bool check_only = false;
  auto* cal = app.add_subcommand("calibrate", "Measure the sieve constants and diff the calibration file");
  cal->add_option("--calibration-file", calibration_file, "Calibration file path")->capture_default_str();
  cal->add_flag("--check", check_only, "Report the diff without rewriting the file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (*cal) return calibrate(calibration_file, check_only, std::cerr);

  try {
    for (const auto& k : kinds) config.kinds.push_back(parse_kind(k));
    if (!p_range.empty()) {
      const auto more = parse_range(p_range);
      config.primes.insert(config.primes.end(), more.begin(), more.end());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  config.timing = !no_timing;
  return run_to_destination(config, std::cout, std::cerr);
}
