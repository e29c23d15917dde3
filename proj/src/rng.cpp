#include "gems/rng.hpp"

#include <cmath>

namespace gems {
namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

inline std::uint64_t mix_key(std::uint64_t seed, std::string_view tag,
                             std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ fnv1a(tag);
  std::uint64_t b = splitmix64(s);
  s = b ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  return splitmix64(s);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::string_view tag,
                     std::uint64_t index)
    : state_(mix_key(seed, tag, index)) {}

std::uint64_t StreamRng::next_u64() { return splitmix64(state_); }

double StreamRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t StreamRng::next_below(std::uint64_t n) {
  // Classic rejection: draw until below the largest multiple of n.
  const std::uint64_t limit = n * ((~0ULL) / n);
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % n;
}

double StreamRng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return gaussian_spare_;
  }
  double u1, u2;
  do {
    u1 = next_double();
  } while (u1 <= 0.0);
  u2 = next_double();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  gaussian_spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                          std::uint64_t index) {
  return mix_key(seed, tag, index);
}

}  // namespace gems
