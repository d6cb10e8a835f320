#include "ira/rng.hpp"

#include "ira/error.hpp"
#include "ira/gaussian.hpp"

namespace ira {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  lo = static_cast<std::uint32_t>(prod);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t setting_index,
                     std::uint64_t replicate_index) {
  constexpr std::uint64_t kMax32 = std::numeric_limits<std::uint32_t>::max();
  if (setting_index > kMax32 || replicate_index > kMax32) {
    throw InvalidInput("setting and replicate indices must fit in 32 bits");
  }
  key_ = {static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)};
  counter_ = {0u, 0u, static_cast<std::uint32_t>(setting_index),
              static_cast<std::uint32_t>(replicate_index)};
}

void RngStream::refill() noexcept {
  block_ = philox4x32_10(counter_, key_);
  if (++counter_[0] == 0) ++counter_[1];
  remaining_ = 2;
}

RngStream::result_type RngStream::operator()() noexcept {
  if (remaining_ == 0) refill();
  const int word = 2 - remaining_--;
  return (static_cast<std::uint64_t>(block_[2 * word + 1]) << 32) | block_[2 * word];
}

double RngStream::uniform() noexcept {
  // (k + 0.5) / 2^53 for k in [0, 2^53): never 0, never 1.
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() noexcept { return std_normal_quantile_unchecked(uniform()); }

}  // namespace ira
