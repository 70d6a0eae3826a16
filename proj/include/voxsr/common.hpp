#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace voxsr {

using Index = std::int64_t;
using Axes3 = std::array<Index, 3>;

// Shape/argument validation failures. The CLI maps these to exit code 2.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// File / format problems (bad magic, truncation, extent mismatch).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse (backward twice on one tape, missing graph).
struct StateError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ShapeError(msg);
}

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Stateless mixing; used to derive per-step / per-item streams so that
// training can resume from a checkpoint without serializing RNG state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

inline bool is_pow2(Index v) { return v > 0 && (v & (v - 1)) == 0; }

inline Index ilog2(Index v) {
  Index n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

}  // namespace voxsr
