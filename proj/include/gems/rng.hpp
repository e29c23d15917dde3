#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace gems {

// Splittable counter-based generator. Every random decision in the engine
// draws from a stream keyed by (seed, purpose tag, index), so split drawing,
// per-step edge masks, parameter init, and dropout never share state and
// results are reproducible across platforms (no std::random distributions,
// whose outputs vary between standard libraries).
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double();

  // Uniform integer in [0, n); n must be > 0. Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t n);

  // Standard normal via Box-Muller.
  double next_gaussian();

  // Fisher-Yates using next_below.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i + 1));
      std::swap(items[i], items[j]);
    }
  }

 private:
  std::uint64_t state_;
  double gaussian_spare_ = 0.0;
  bool has_spare_ = false;
};

// One value from a (seed, tag, index) stream; handy for deriving sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                          std::uint64_t index = 0);

}  // namespace gems
