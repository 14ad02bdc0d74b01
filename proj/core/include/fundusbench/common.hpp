#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fundusbench {

/// Raised for bad configuration (unknown keys, invalid adapters, contract
/// violations in user input). The CLI maps this to exit code 2; everything
/// else derived from std::exception exits 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void warn(const std::string& message);

// ---------------------------------------------------------------------------
// Deterministic hashing. Stable across platforms and runs; used for dataset
// fingerprints and split assignment keys. Not cryptographic.
// ---------------------------------------------------------------------------

constexpr std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Combines a seed with a string key into an independent stream seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view key) {
  return splitmix64(splitmix64(seed) ^ fnv1a64(key));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
  return splitmix64(splitmix64(seed) ^ splitmix64(key));
}

// ---------------------------------------------------------------------------
// Rng: small deterministic generator with explicitly defined value mappings.
// std::uniform_*_distribution is implementation-defined, so pipelines and
// splits avoid it to keep artifacts bit-reproducible across toolchains.
// ---------------------------------------------------------------------------
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x5851f42d4c957f2dull)) {}

  std::uint64_t next_u64() {
    state_ = splitmix64(state_);
    return state_;
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Minimal RFC-4180-ish CSV helpers (quotes fields containing , " or newline).
// ---------------------------------------------------------------------------
std::string csv_escape(const std::string& field);
std::string csv_join(const std::vector<std::string>& fields);
std::vector<std::string> csv_split(const std::string& line);

/// Fixed formatting for floats in reports: shortest round-trip decimal.
std::string format_double(double v);

/// Renders an optional metric; empty optionals become "undefined".
std::string format_metric(const std::optional<double>& v);

}  // namespace fundusbench
