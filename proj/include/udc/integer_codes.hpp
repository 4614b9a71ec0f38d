#pragma once

// Universal prefix-free integer codes.
//
//   gamma+(k)  = 0^N 1 a_{N-1}..a_0             (k >= 1, N = floor(log2 k))
//   delta+(k)  = gamma+(N+1) a_{N-1}..a_0
//   delta(k)   = delta+(1 - 2k) for k <= 0, delta+(2k) for k > 0
//   fixed_k(i) = i in exactly k bits, MSB first

#include <bit>
#include <cstdint>

#include "udc/bits.hpp"

namespace udc::codes {

inline constexpr int kDefaultZeroCap = 64;

/// floor(log2 x) for x >= 1, computed on integers.
constexpr int floor_log2(std::uint64_t x) noexcept {
    return static_cast<int>(std::bit_width(x)) - 1;
}

void append_gamma_plus(BitString& out, std::uint64_t k);
void append_delta_plus(BitString& out, std::uint64_t k);
void append_delta_signed(BitString& out, std::int64_t k);
void append_fixed(BitString& out, std::uint64_t i, int width);

BitString elias_gamma_plus(std::uint64_t k);
BitString elias_delta_plus(std::uint64_t k);
BitString elias_delta_signed(std::int64_t k);
BitString fixed_binary(std::uint64_t i, int width);

/// 2*floor(log2 k) + 1.
int gamma_plus_length(std::uint64_t k);

/// Length of delta(k) from the closed form
///   floor(log(2|k|+1)) + 2 floor(log(floor(log(2|k|+1)) + 1)) + 1.
int delta_signed_length(std::int64_t k);

/// The non-negative integer that delta(k) codes with delta+.
std::uint64_t zigzag(std::int64_t k);
std::int64_t unzigzag(std::uint64_t m);

std::uint64_t decode_gamma_plus(BitReader& reader, int zero_cap = kDefaultZeroCap);
std::uint64_t decode_delta_plus(BitReader& reader, int zero_cap = kDefaultZeroCap);
std::int64_t decode_delta_signed(BitReader& reader, int zero_cap = kDefaultZeroCap);
std::uint64_t decode_fixed(BitReader& reader, int width);

}  // namespace udc::codes
