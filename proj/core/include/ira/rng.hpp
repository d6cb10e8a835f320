#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ira {

/// Philox4x32-10 block function (Salmon et al. 2011): a keyed bijection on
/// 128-bit counters. Exposed for known-answer tests.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

/// Deterministic random stream addressed by (master seed, setting, replicate).
///
/// The seed is the Philox key; setting and replicate indices occupy the high
/// half of the counter and the low half counts blocks within the stream. Two
/// streams with the same triple produce the same draws on any thread, and
/// streams with different triples never overlap.
///
/// Satisfies std::uniform_random_bit_generator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t setting_index, std::uint64_t replicate_index);

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal by inversion of a uniform draw.
  double normal() noexcept;

 private:
  void refill() noexcept;

  std::array<std::uint32_t, 2> key_{};
  std::array<std::uint32_t, 4> counter_{};
  std::array<std::uint32_t, 4> block_{};
  int remaining_ = 0;  // unused 64-bit words left in block_
};

}  // namespace ira
