#include "scan.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "detsum/characters.hpp"
#include "detsum/detsums.hpp"
#include "detsum/error.hpp"
#include "detsum/fp_arith.hpp"
#include "detsum/mat2.hpp"
#include "detsum/residues.hpp"
#include "detsum/sifter.hpp"

namespace detsum::cli {

namespace {

constexpr std::string_view kVersion = "0.1.0";

struct KindEntry {
  Kind kind;
  std::string_view name;
};

constexpr KindEntry kKinds[] = {
    {Kind::S, "s"},
    {Kind::U, "u"},
    {Kind::TAbs, "t_abs"},
    {Kind::TN, "t_n"},
    {Kind::DeltaProfile, "delta_profile"},
    {Kind::Census, "census"},
    {Kind::NonResidue, "nonresidue"},
    {Kind::Sift, "sift"},
    {Kind::DeMoment, "de_moment"},
};

enum class Schema { None, Sums, Census, NonResidue, Sift, Delta };

Schema schema_of(Kind k) {
  switch (k) {
    case Kind::S:
    case Kind::U:
    case Kind::TAbs:
    case Kind::TN:
    case Kind::DeMoment: return Schema::Sums;
    case Kind::Census: return Schema::Census;
    case Kind::NonResidue: return Schema::NonResidue;
    case Kind::Sift: return Schema::Sift;
    case Kind::DeltaProfile: return Schema::Delta;
  }
  return Schema::None;
}

std::string_view header_of(Schema s) {
  switch (s) {
    case Schema::Sums: return "p,d,N,sum_kind,re_value,im_value,abs_value,normalized,wall_ms";
    case Schema::Census: return "p,n_total,n_square,n_nonsquare_invertible,ratio";
    case Schema::NonResidue: return "p,z_p,kappa_empirical,X,count,density";
    case Schema::Sift: return "N,x,y,r,size";
    case Schema::Delta: return "N,delta,count";
    case Schema::None: break;
  }
  return "";
}

bool needs_primes(Kind k) {
  return k != Kind::Sift && k != Kind::DeltaProfile;
}
bool needs_grid(Kind k) { return k != Kind::Census && k != Kind::NonResidue; }
bool uses_orders(Kind k) { return schema_of(k) == Schema::Sums; }

std::uint32_t table_bound(const ScanConfig& c) {
  return c.max_table != 0 ? c.max_table : max_table_from_env();
}

// Random +-1 weights, fixed by (seed, p, d, N, stream) alone.
std::vector<double> sign_weights(const ScanConfig& c, std::uint32_t p, std::uint32_t d,
                                 std::uint32_t N, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32U),
                    p, d, N, static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  std::vector<double> w(N);
  for (auto& v : w) v = (rng() >> 63U) != 0 ? 1.0 : -1.0;
  return w;
}

class Clock {
 public:
  Clock() : start_(std::chrono::steady_clock::now()) {}
  [[nodiscard]] double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct SumRow {
  std::complex<double> value;
  double wall_ms = 0.0;
};

class Runner {
 public:
  Runner(const ScanConfig& c, std::ostream& csv) : c_(c), csv_(csv) {}

  void run() {
    for (Kind kind : c_.kinds) {
      const Schema schema = schema_of(kind);
      if (schema != current_) {
        csv_ << header_of(schema) << '\n';
        current_ = schema;
      }
      switch (schema) {
        case Schema::Sums: run_sums(kind); break;
        case Schema::Census: run_census(); break;
        case Schema::NonResidue: run_nonresidue(); break;
        case Schema::Sift: run_sift(); break;
        case Schema::Delta: run_delta(); break;
        case Schema::None: break;
      }
    }
  }

 private:
  const FieldPtr& field(std::uint32_t p) {
    auto it = fields_.find(p);
    if (it == fields_.end()) it = fields_.emplace(p, make_field(p, table_bound(c_))).first;
    return it->second;
  }

  SumRow compute_sum(Kind kind, const Character& chi, std::uint32_t N) {
    const Clock clock;
    SumRow row;
    const std::uint32_t p = chi.p();
    switch (kind) {
      case Kind::S: row.value = s_sum_binned(chi, N).value(); break;
      case Kind::U: {
        const WeightSeq alpha(sign_weights(c_, p, chi.order(), N, 1));
        const WeightSeq beta(sign_weights(c_, p, chi.order(), N, 2));
        row.value = u_sum(chi, alpha, beta, N);
        break;
      }
      case Kind::TAbs: {
        std::vector<Residue> D(N);
        std::iota(D.begin(), D.end(), Residue{1});
        const auto alpha = sign_weights(c_, p, chi.order(), N, 3);
        row.value = t_abs_sum(chi, N, N, N, D, alpha);
        break;
      }
      case Kind::TN: row.value = t_n_sum(chi, N); break;
      case Kind::DeMoment: {
        std::vector<Residue> D(N);
        std::iota(D.begin(), D.end(), Residue{1});
        const std::vector<double> alpha(N, 1.0);
        row.value = de_moment(chi, D, alpha, c_.nu);
        break;
      }
      default: break;
    }
    row.wall_ms = c_.timing ? clock.ms() : 0.0;
    return row;
  }

  void run_sums(Kind kind) {
    for (std::uint32_t p : c_.primes) {
      for (std::uint32_t d : c_.orders) {
        const Character chi = make_character(field(p), d);
        for (std::uint32_t N : c_.n_grid) {
          const SumRow row = compute_sum(kind, chi, N);
          const double n4 = std::pow(static_cast<double>(N), 4);
          const double mag = std::abs(row.value);
          csv_ << p << ',' << d << ',' << N << ',' << kind_name(kind) << ','
               << format_double(row.value.real()) << ',' << format_double(row.value.imag()) << ','
               << format_double(mag) << ',' << format_double(mag / n4) << ','
               << format_double(row.wall_ms) << '\n';
        }
      }
    }
  }

  void run_census() {
    for (std::uint32_t p : c_.primes) {
      const Census cs = census(*field(p), c_.workers);
      csv_ << cs.p << ',' << cs.n_total << ',' << cs.n_square << ',' << cs.n_nonsquare_invertible
           << ',' << format_double(cs.ratio) << '\n';
    }
  }

  void run_nonresidue() {
    for (std::uint32_t p : c_.primes) {
      std::vector<std::uint32_t> xs = c_.n_grid;
      if (xs.empty()) xs.push_back(p - 1);
      for (std::uint32_t X : xs) {
        const NonResidueReport r = nonresidue_report(*field(p), X);
        csv_ << r.p << ',' << r.z_p << ',' << format_double(r.kappa_empirical) << ',' << r.X << ','
             << r.count << ',' << format_double(r.density()) << '\n';
      }
    }
  }

  void run_sift() {
    for (std::uint32_t N : c_.n_grid) {
      const double y = c_.y > 0.0 ? c_.y : static_cast<double>(N);
      const SiftProfile prof = sift(N, c_.x, y);
      for (std::size_t r = 0; r < prof.sizes.size(); ++r) {
        csv_ << N << ',' << format_double(c_.x) << ',' << format_double(y) << ',' << r << ','
             << prof.sizes[r] << '\n';
      }
    }
  }

  void run_delta() {
    for (std::uint32_t N : c_.n_grid) {
      const DeltaProfile prof = delta_profile(N);
      for (std::int64_t delta = -prof.max_delta(); delta <= prof.max_delta(); ++delta) {
        csv_ << N << ',' << delta << ',' << prof.count(delta) << '\n';
      }
    }
  }

  const ScanConfig& c_;
  std::ostream& csv_;
  Schema current_ = Schema::None;
  std::map<std::uint32_t, FieldPtr> fields_;
};

std::string join(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Kind parse_kind(std::string_view name) {
  for (const auto& e : kKinds) {
    if (e.name == name) return e.kind;
  }
  throw ValidationError("unknown kind '" + std::string(name) + "'");
}

std::string_view kind_name(Kind kind) noexcept {
  for (const auto& e : kKinds) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

std::vector<std::uint32_t> odd_primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = std::max<std::uint32_t>(lo, 3); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

void validate(const ScanConfig& c) {
  if (c.kinds.empty()) throw ValidationError("no --kind given");
  const std::uint32_t bound = table_bound(c);
  bool want_primes = false, want_grid = false, want_orders = false;
  for (Kind k : c.kinds) {
    want_primes |= needs_primes(k);
    want_grid |= needs_grid(k);
    want_orders |= uses_orders(k);
  }
  if (want_primes && c.primes.empty()) throw ValidationError("no primes given (--p or --p-range)");
  if (want_grid && c.n_grid.empty()) throw ValidationError("no --n-grid given");
  if (c.nu < 1 || c.nu > 6) throw ValidationError("--nu must lie in [1, 6]");

  for (std::uint32_t p : c.primes) {
    if (p < 3 || !is_prime(p)) throw ValidationError("p=" + std::to_string(p) + " is not an odd prime");
    if (p > bound) {
      throw ValidationError("p=" + std::to_string(p) + " exceeds the table bound " + std::to_string(bound));
    }
    if (want_orders) {
      for (std::uint32_t d : c.orders) {
        if (d < 2 || (p - 1) % d != 0) {
          throw ValidationError("invalid (p=" + std::to_string(p) + ", d=" + std::to_string(d) +
                                "): order must be >= 2 and divide p-1");
        }
      }
    }
  }
  for (std::uint32_t N : c.n_grid) {
    if (N < 1) throw ValidationError("grid values must be >= 1");
  }

  for (Kind k : c.kinds) {
    if (k == Kind::Census) {
      for (std::uint32_t p : c.primes) {
        if (p > kDefaultCensusBound) {
          throw ValidationError("census needs p <= " + std::to_string(kDefaultCensusBound) +
                                ", got p=" + std::to_string(p));
        }
      }
    }
    if (k == Kind::Sift) {
      for (std::uint32_t N : c.n_grid) {
        const double y = c.y > 0.0 ? c.y : static_cast<double>(N);
        if (!(c.x >= 2.0 && y >= c.x && static_cast<double>(N) >= y)) {
          throw ValidationError("sift window needs N >= y >= x >= 2 (N=" + std::to_string(N) + ")");
        }
      }
    }
    if (k == Kind::DeltaProfile) {
      for (std::uint32_t N : c.n_grid) {
        if (static_cast<std::uint64_t>(N) * N >= (std::uint64_t{1} << 31)) {
          throw ValidationError("delta_profile needs N^2 < 2^31");
        }
      }
    }
    if (!needs_primes(k)) continue;
    for (std::uint32_t p : c.primes) {
      for (std::uint32_t N : c.n_grid) {
        if (k == Kind::NonResidue || needs_grid(k)) {
          if (N >= p && k != Kind::Census) {
            throw ValidationError("invalid (p=" + std::to_string(p) + ", N=" + std::to_string(N) +
                                  "): need N < p");
          }
        }
        if (k == Kind::TAbs && static_cast<std::uint64_t>(N) * N * N >= p) {
          throw ValidationError("t_abs needs N^3 < p, got (p=" + std::to_string(p) +
                                ", N=" + std::to_string(N) + ")");
        }
      }
    }
  }
}

int run(const ScanConfig& config, std::ostream& csv, std::ostream& log) {
  try {
    validate(config);
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  try {
    Runner(config, csv).run();
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalInvariantViolation ? kExitInvariant : kExitValidation;
  }
  return kExitOk;
}

int run_to_destination(const ScanConfig& config, std::ostream& fallback, std::ostream& log) {
  const auto wall_start = std::chrono::steady_clock::now();
  int status = kExitOk;
  if (config.out.empty()) {
    status = run(config, fallback, log);
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      log << "error: cannot open " << config.out << '\n';
      return kExitValidation;
    }
    status = run(config, file, log);
  }
  if (config.out.empty() || status != kExitOk) return status;

  nlohmann::ordered_json manifest;
  std::vector<std::string> kinds;
  for (Kind k : config.kinds) kinds.emplace_back(kind_name(k));
  manifest["tool"] = "detsum";
  manifest["version"] = kVersion;
  manifest["compiler"] = __VERSION__;
  manifest["config"] = {
      {"primes", config.primes}, {"orders", config.orders},   {"n_grid", config.n_grid},
      {"kinds", kinds},          {"workers", config.workers}, {"seed", config.seed},
      {"timing", config.timing}, {"x", config.x},             {"y", config.y},
      {"nu", config.nu},         {"max_table", table_bound(config)},
  };
  manifest["wall_ms"] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - wall_start)
                            .count();
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  manifest["timestamp"] = stamp;
  std::ofstream(config.out + ".manifest.json") << manifest.dump(2) << '\n';
  log << "wrote " << config.out << " (primes " << join(config.primes) << ")\n";
  return status;
}

int calibrate(const std::string& path, bool check_only, std::ostream& log) {
  // Round through the file format so an unchanged grid compares equal.
  Calibration fresh;
  {
    std::stringstream buf;
    run_calibration_grid().write(buf);
    fresh = Calibration::parse(buf);
  }
  bool worsened = false;
  std::size_t changed = 0;
  if (std::filesystem::exists(path)) {
    Calibration old;
    try {
      old = Calibration::load(path);
    } catch (const Error& e) {
      log << "error: " << e.what() << '\n';
      return kExitValidation;
    }
    for (const auto& [name, value] : fresh.constants) {
      const auto it = old.constants.find(name);
      if (it == old.constants.end()) {
        log << "+ " << name << ' ' << format_double(value) << '\n';
        ++changed;
        continue;
      }
      if (format_double(it->second) == format_double(value)) continue;
      ++changed;
      log << "~ " << name << ' ' << format_double(it->second) << " -> " << format_double(value)
          << '\n';
      if (value > it->second * 1.05) worsened = true;
    }
    for (const auto& [name, value] : old.constants) {
      if (!fresh.constants.contains(name)) {
        log << "- " << name << ' ' << format_double(value) << '\n';
        ++changed;
      }
    }
    log << changed << " constant(s) differ\n";
  } else {
    log << "no existing calibration at " << path << '\n';
    changed = fresh.constants.size();
  }
  if (worsened) {
    log << "error: a pinned constant grew by more than 5%\n";
    return kExitInvariant;
  }
  if (!check_only) {
    std::ofstream out(path);
    if (!out) {
      log << "error: cannot write " << path << '\n';
      return kExitValidation;
    }
    out << "# detsum calibration constants: name value\n";
    fresh.write(out);
  }
  return kExitOk;
}

}  // namespace detsum::cli
