#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace udc {

/// Growable bit sequence. Bits are packed most-significant first; the unused
/// tail of the last byte is always zero, so `bytes()` is the on-disk packing.
class BitString {
public:
    BitString() = default;

    /// Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view text);

    /// Copies `bit_count` bits out of an MSB-first packed buffer.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    void push_back(bool bit);

    /// Appends the low `width` bits of `value`, most significant first.
    void append_bits(std::uint64_t value, int width);

    void append(const BitString& other);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    bool operator[](std::size_t i) const noexcept {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
    }

    bool starts_with(const BitString& prefix) const;

    std::string to_string() const;
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    friend bool operator==(const BitString& a, const BitString& b) {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

BitString operator+(BitString a, const BitString& b);

/// Sequential reader over an MSB-first bit buffer. Reading past the end throws
/// StreamExhausted; it never yields implicit zeros.
class BitReader {
public:
    /// Keeps its own copy of the bits.
    explicit BitReader(const BitString& bits);
    /// Views `bytes`, which must outlive the reader.
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    BitReader(const BitReader&) = delete;
    BitReader& operator=(const BitReader&) = delete;

    bool read_bit();

    /// Reads `width` bits (0..64) as an unsigned integer, MSB first.
    std::uint64_t read_bits(int width);

    std::size_t position() const noexcept { return cursor_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t remaining() const noexcept { return size_ - cursor_; }
    bool at_end() const noexcept { return cursor_ == size_; }

    /// True when every unread bit is zero (stream padding).
    bool only_zeros_remain() const;

    void seek(std::size_t position);

private:
    std::vector<std::uint8_t> owned_;
    std::span<const std::uint8_t> bytes_;
    std::size_t size_;
    std::size_t cursor_ = 0;
};

}  // namespace udc
