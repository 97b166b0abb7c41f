#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace minrank {

// Raised when an exact-search size limit is exceeded.
struct limit_exceeded : std::runtime_error {
  explicit limit_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive search fails to find a principal submatrix
// witness that must exist for every matrix. This would falsify the
// underlying statement and has to abort loudly.
struct counterexample_error : std::logic_error {
  explicit counterexample_error(const std::string& what) : std::logic_error(what) {}
};

// splitmix64: fixed 64-bit generator pinning all randomness bit-exactly.
struct splitmix64 {
  std::uint64_t state;

  explicit splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// One splitmix64 output for seed x; used to derive per-trial seeds.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  return splitmix64(x).next();
}

}  // namespace minrank
