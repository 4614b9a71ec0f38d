#include "udc/integer_codes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "udc/errors.hpp"

namespace udc::codes {

void append_gamma_plus(BitString& out, std::uint64_t k) {
    if (k < 1) {
        throw DomainError("gamma+ code is defined for k >= 1");
    }
    const int n = floor_log2(k);
    out.append_bits(0, n);
    out.append_bits(k, n + 1);
}

void append_delta_plus(BitString& out, std::uint64_t k) {
    if (k < 1) {
        throw DomainError("delta+ code is defined for k >= 1");
    }
    const int n = floor_log2(k);
    append_gamma_plus(out, static_cast<std::uint64_t>(n) + 1);
    out.append_bits(k, n);
}

std::uint64_t zigzag(std::int64_t k) {
    if (k == std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("signed delta code cannot represent INT64_MIN");
    }
    if (k <= 0) {
        return 1 + 2 * static_cast<std::uint64_t>(-k);
    }
    return 2 * static_cast<std::uint64_t>(k);
}

std::int64_t unzigzag(std::uint64_t m) {
    if (m % 2 == 0) {
        return static_cast<std::int64_t>(m / 2);
    }
    return -static_cast<std::int64_t>((m - 1) / 2);
}

void append_delta_signed(BitString& out, std::int64_t k) {
    append_delta_plus(out, zigzag(k));
}

void append_fixed(BitString& out, std::uint64_t i, int width) {
    if (width < 0 || width > 64) {
        throw DomainError("fixed-width field must be 0..64 bits");
    }
    if (width < 64 && (i >> width) != 0) {
        throw DomainError("value " + std::to_string(i) + " does not fit in " + std::to_string(width) +
                          " bits");
    }
    out.append_bits(i, width);
}

BitString elias_gamma_plus(std::uint64_t k) {
    BitString out;
    append_gamma_plus(out, k);
    return out;
}

BitString elias_delta_plus(std::uint64_t k) {
    BitString out;
    append_delta_plus(out, k);
    return out;
}

BitString elias_delta_signed(std::int64_t k) {
    BitString out;
    append_delta_signed(out, k);
    return out;
}

BitString fixed_binary(std::uint64_t i, int width) {
    BitString out;
    append_fixed(out, i, width);
    return out;
}

int gamma_plus_length(std::uint64_t k) {
    if (k < 1) {
        throw DomainError("gamma+ code is defined for k >= 1");
    }
    return 2 * floor_log2(k) + 1;
}

int delta_signed_length(std::int64_t k) {
    if (k == std::numeric_limits<std::int64_t>::min()) {
        throw DomainError("signed delta code cannot represent INT64_MIN");
    }
    const std::uint64_t magnitude = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    const int a = floor_log2(2 * magnitude + 1);
    return a + 2 * floor_log2(static_cast<std::uint64_t>(a) + 1) + 1;
}

std::uint64_t decode_gamma_plus(BitReader& reader, int zero_cap) {
    const std::size_t start = reader.position();
    const int cap = std::min(zero_cap, 63);
    int zeros = 0;
    try {
        while (!reader.read_bit()) {
            if (++zeros > cap) {
                throw MalformedCodeword("gamma codeword has more than " + std::to_string(cap) +
                                            " leading zeros",
                                        start);
            }
        }
        return (std::uint64_t{1} << zeros) | reader.read_bits(zeros);
    } catch (const StreamExhausted&) {
        throw StreamExhausted("truncated gamma codeword", start);
    }
}

std::uint64_t decode_delta_plus(BitReader& reader, int zero_cap) {
    const std::size_t start = reader.position();
    const std::uint64_t length = decode_gamma_plus(reader, zero_cap);
    if (length > 64) {
        throw MalformedCodeword("delta codeword announces more than 64 bits", start);
    }
    const int n = static_cast<int>(length) - 1;
    try {
        const std::uint64_t high = n == 64 ? 0 : (std::uint64_t{1} << n);
        return high | reader.read_bits(n);
    } catch (const StreamExhausted&) {
        throw StreamExhausted("truncated delta codeword", start);
    }
}

std::int64_t decode_delta_signed(BitReader& reader, int zero_cap) {
    return unzigzag(decode_delta_plus(reader, zero_cap));
}

std::uint64_t decode_fixed(BitReader& reader, int width) {
    const std::size_t start = reader.position();
    try {
        return reader.read_bits(width);
    } catch (const StreamExhausted&) {
        throw StreamExhausted("truncated fixed-width field", start);
    }
}

}  // namespace udc::codes
