#pragma once

#include <cstdint>
#include <string_view>

namespace ising {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Counter-based 64-bit generator.
///
/// The i-th output is mix64(key + (i + 1) * golden_gamma), i.e. SplitMix64
/// evaluated at an explicit counter. Output depends only on (key, counter),
/// so results are bit-identical across platforms and compilers, and any
/// position of a stream can be reached in O(1) via seek().
///
/// Independent streams for different purposes are obtained with
/// CounterRng::stream(master_seed, "purpose", index), which hashes all three
/// into the key.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

  constexpr explicit CounterRng(std::uint64_t key = 0, std::uint64_t counter = 0) noexcept
      : key_(key), counter_(counter) {}

  static constexpr CounterRng stream(std::uint64_t master_seed, std::string_view tag,
                                     std::uint64_t index = 0) noexcept {
    return CounterRng(derive_key(master_seed, tag, index));
  }

  static constexpr std::uint64_t derive_key(std::uint64_t master_seed, std::string_view tag,
                                            std::uint64_t index) noexcept {
    return mix64(mix64(master_seed ^ fnv1a64(tag)) + mix64(index + golden_gamma));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

  constexpr result_type operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * golden_gamma);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on [0, bound). Multiply-shift; bias is below bound / 2^64.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }

  constexpr void seek(std::uint64_t counter) noexcept { counter_ = counter; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }
  constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace ising
