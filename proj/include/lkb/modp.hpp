#pragma once

#include <cstdint>

namespace lkb::modp {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= P ? s - P : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + P - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & P);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return add(lo, hi);
}
inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }
inline std::uint64_t from_signed(long long v) {
  long long r = v % static_cast<long long>(P);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
}

}  // namespace lkb::modp
