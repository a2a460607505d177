#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace veeg {

// Error taxonomy maps onto CLI exit codes: config=2, data=3, numeric=4.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// SplitMix64: tiny counter-based generator used everywhere seeds are derived.
// All randomness in the project flows through this so that synthetic corpora
// and stochastic algorithms are bit-reproducible across platforms (no reliance
// on libstdc++ distribution internals).
struct SplitMix64 {
  uint64_t state{0};

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  // standard normal via Box-Muller (no cached spare; deterministic draw count)
  double gaussian();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }
};

// Stable seed derivation: fold a label into a parent seed so parallel workers
// get independent streams regardless of scheduling order.
uint64_t derive_seed(uint64_t seed, const std::string& label);
uint64_t derive_seed(uint64_t seed, uint64_t index);

// FNV-1a over bytes; used for cache keys and audit digests (not security).
struct Fnv64 {
  uint64_t h{0xcbf29ce484222325ULL};
  void update(const void* data, size_t n);
  void update(const std::string& s) { update(s.data(), s.size()); }
  uint64_t digest() const { return h; }
};

std::string hex64(uint64_t v);

// 128-bit content key as hex: two independent FNV passes.
std::string content_key(const std::string& bytes);

std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::string& bytes);

// shortest round-trip formatting (used by every CSV writer so artifacts are
// byte-stable and re-parse to the exact double)
std::string format_double(double v);
std::string format_float(float v);

}  // namespace veeg
