#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oee {

using Vector = std::vector<double>;
using Matrix = std::vector<std::vector<double>>;

/// Violated numeric precondition of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File, schema or I/O problem.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model fitting failure (divergence, exhausted iterations, bad model file).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// splitmix64 generator. All randomness in the project flows through this
/// so that results are bit-identical across platforms and standard-library
/// versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Standard normal draw, Box-Muller, one value per call.
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586 * u2);
  }

  double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

 private:
  std::uint64_t state_;
};

/// Decorrelated child stream keyed on (seed, index). Per-row and per-tree
/// streams are derived this way, so growing the item count never reshuffles
/// earlier items.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
  return g.next();
}

/// Fisher-Yates shuffle driven by a SplitMix64 stream.
template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace oee
