#include "detsum/sifter.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "detsum/error.hpp"

namespace detsum {

Sieve::Sieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t q : primes_) {
      const std::uint64_t m = static_cast<std::uint64_t>(q) * i;
      if (q > spf_[i] || m > limit) break;
      spf_[m] = q;
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Sieve::factor(std::uint32_t n) const {
  if (n < 1 || n > limit_) throw Error(Errc::OutOfRange, "factor argument outside the sieve");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (n > 1) {
    const std::uint32_t q = spf_[n];
    std::uint32_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  return out;
}

std::uint64_t SiftProfile::total() const noexcept {
  return std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
}

std::uint32_t window_divisors(std::uint32_t n, double x, double y, const Sieve& sieve,
                              Multiplicity mode) {
  std::uint32_t r = 0;
  while (n > 1) {
    const std::uint32_t q = sieve.spf(n);
    std::uint32_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (q > x && q <= y) r += mode == Multiplicity::Counted ? e : 1;
  }
  return r;
}

namespace {

void check_window(std::uint32_t N, double x, double y) {
  if (!(x >= 2.0 && y >= x && static_cast<double>(N) >= y)) {
    throw Error(Errc::BadWindow, "need N >= y >= x >= 2");
  }
}

}  // namespace

SiftProfile sift(const Sieve& sieve, std::uint32_t N, double x, double y, Multiplicity mode) {
  check_window(N, x, y);
  if (N > sieve.limit()) throw Error(Errc::OutOfRange, "N exceeds the sieve limit");
  SiftProfile out{N, x, y, mode, {}};
  for (std::uint32_t n = 1; n <= N; ++n) {
    const std::uint32_t r = window_divisors(n, x, y, sieve, mode);
    if (r >= out.sizes.size()) out.sizes.resize(r + 1, 0);
    ++out.sizes[r];
  }
  return out;
}

SiftProfile sift(std::uint32_t N, double x, double y, Multiplicity mode) {
  check_window(N, x, y);
  return sift(Sieve(N), N, x, y, mode);
}

double a0_ratio(std::uint32_t N, double x, double y) {
  const SiftProfile prof = sift(N, x, y);
  const double scale = static_cast<double>(N) * std::log(2.0 * x) / std::log(2.0 * y);
  return static_cast<double>(prof.sizes[0]) / scale;
}

bool a0_bound_check(std::uint32_t N, double x, double y, double C) {
  const SiftProfile prof = sift(N, x, y);
  return static_cast<double>(prof.sizes[0]) <=
         C * static_cast<double>(N) * std::log(2.0 * x) / std::log(2.0 * y);
}

namespace {

std::uint64_t binom_small(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_s(int s) {
  if (s < 1 || s > 4) throw Error(Errc::OutOfRange, "s must lie in [1, 4]");
}

}  // namespace

std::uint64_t tau(std::uint64_t m, int s) {
  if (m < 1) throw Error(Errc::OutOfRange, "tau needs m >= 1");
  check_s(s);
  std::uint64_t result = 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    std::uint64_t e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) result *= binom_small(e + s - 1, s - 1);
  }
  if (m > 1) result *= static_cast<std::uint64_t>(s);
  return result;
}

std::uint64_t tau_square_average(std::uint32_t M, int s) {
  if (M < 1) throw Error(Errc::OutOfRange, "M must be >= 1");
  check_s(s);
  const Sieve sieve(M);
  std::uint64_t total = 0;
  for (std::uint32_t m = 1; m <= M; ++m) {
    std::uint64_t t = 1;
    for (const auto& [q, e] : sieve.factor(m)) t *= binom_small(e + s - 1, s - 1);
    total += t * t;
  }
  return total;
}

double tau_square_ratio(std::uint32_t M, int s) {
  const double m = M;
  return static_cast<double>(tau_square_average(M, s)) / (m * std::pow(std::log(2.0 * m), s * s - 1));
}

double prime_tail(double x, const Sieve& sieve) {
  if (x < 1.0) throw Error(Errc::OutOfRange, "prime_tail needs x >= 1");
  double sum = 0.0;
  const auto& ps = sieve.primes();
  // Smallest terms first.
  for (auto it = ps.rbegin(); it != ps.rend() && static_cast<double>(*it) >= x; ++it) {
    const double q = *it;
    sum += 1.0 / (q * q);
  }
  return sum;
}

double prime_tail(double x, std::uint32_t P) {
  if (x > P) return 0.0;
  return prime_tail(x, Sieve(P));
}

Calibration Calibration::parse(std::istream& in) {
  Calibration cal;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    std::string name;
    std::string raw;
    if (!(fields >> name)) continue;
    if (!(fields >> raw)) throw Error(Errc::OutOfRange, "calibration entry without value: " + name);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
      throw Error(Errc::OutOfRange, "bad calibration value for " + name);
    }
    cal.constants[name] = v;
  }
  return cal;
}

Calibration Calibration::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::OutOfRange, "cannot open calibration file " + path);
  return parse(in);
}

void Calibration::write(std::ostream& out) const {
  for (const auto& [name, value] : constants) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    out << name << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
  }
}

double Calibration::at(const std::string& name) const {
  const auto it = constants.find(name);
  if (it == constants.end()) throw Error(Errc::OutOfRange, "missing calibration constant " + name);
  return it->second;
}

Calibration run_calibration_grid() {
  Calibration cal;

  double a0 = 0.0;
  for (std::uint32_t N : {1'000U, 10'000U, 100'000U}) {
    const Sieve sieve(N);
    const double n = N;
    for (double x : {2.0, 3.0, 5.0, 10.0, 30.0, 100.0}) {
      for (double y : {x, 2 * x, 10 * x, x * x, std::sqrt(n), n}) {
        if (y < x || y > n) continue;
        const SiftProfile prof = sift(sieve, N, x, y);
        const double scale = n * std::log(2.0 * x) / std::log(2.0 * y);
        a0 = std::max(a0, static_cast<double>(prof.sizes[0]) / scale);
      }
    }
  }
  cal.constants["a0_bound"] = a0;

  for (int s : {2, 3, 4}) {
    double c = 0.0;
    for (std::uint32_t M : {10U, 100U, 1'000U, 10'000U, 100'000U}) {
      c = std::max(c, tau_square_ratio(M, s));
    }
    cal.constants["tau" + std::to_string(s) + "_square"] = c;
  }

  const Sieve big(1'000'000);
  double tail = 0.0;
  for (double x : {1.0, 2.0, 3.0, 5.0, 10.0, 100.0, 1'000.0, 10'000.0}) {
    tail = std::max(tail, prime_tail(x, big) * x * std::log(2.0 * x));
  }
  cal.constants["prime_tail"] = tail;
  return cal;
}

}  // namespace detsum
