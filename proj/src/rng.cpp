#include "oapoly/rng.hpp"

#include <cmath>
#include <numbers>

namespace oapoly {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed)
    : gen_(splitmix64(seed)), origin_(seed) {}

RandomStream::RandomStream(std::uint64_t seed, std::string_view label)
    : RandomStream(splitmix64(seed ^ fnv1a(label))) {}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RandomStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

std::uint64_t RandomStream::below(std::uint64_t n) {
  // Lemire multiply-shift; the bias at 64 bits is far below anything we
  // could observe and the draw count stays at one word.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

RandomStream RandomStream::fork(std::string_view label) {
  return RandomStream(origin_ ^ splitmix64(next_u64()), label);
}

}  // namespace oapoly
