#include "udc/bits.hpp"

#include "udc/errors.hpp"

namespace udc {

BitString BitString::from_string(std::string_view text) {
    BitString out;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError(std::string("bit string contains non-binary character '") + c + "'");
        }
        out.push_back(c == '1');
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8) {
        throw DomainError("bit count exceeds buffer size");
    }
    BitString out;
    out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
    out.size_ = bit_count;
    if (bit_count % 8 != 0) {
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bit_count % 8));
    }
    return out;
}

void BitString::push_back(bool bit) {
    if ((size_ & 7) == 0) {
        bytes_.push_back(0);
    }
    if (bit) {
        bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
    }
    ++size_;
}

void BitString::append_bits(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) {
        push_back((value >> i) & 1u);
    }
}

void BitString::append(const BitString& other) {
    if ((size_ & 7) == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i) {
        push_back(other[i]);
    }
}

bool BitString::starts_with(const BitString& prefix) const {
    if (prefix.size_ > size_) {
        return false;
    }
    for (std::size_t i = 0; i < prefix.size_; ++i) {
        if ((*this)[i] != prefix[i]) {
            return false;
        }
    }
    return true;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        out.push_back((*this)[i] ? '1' : '0');
    }
    return out;
}

BitString operator+(BitString a, const BitString& b) {
    a.append(b);
    return a;
}

BitReader::BitReader(const BitString& bits)
    : owned_(bits.bytes().begin(), bits.bytes().end()), bytes_(owned_), size_(bits.size()) {}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
    : bytes_(bytes), size_(bit_count) {
    if (bit_count > bytes.size() * 8) {
        throw DomainError("bit count exceeds buffer size");
    }
}

bool BitReader::read_bit() {
    if (cursor_ >= size_) {
        throw StreamExhausted("read past end of bit stream", cursor_);
    }
    const bool bit = (bytes_[cursor_ >> 3] >> (7 - (cursor_ & 7))) & 1u;
    ++cursor_;
    return bit;
}

std::uint64_t BitReader::read_bits(int width) {
    if (width < 0 || width > 64) {
        throw DomainError("read width must be in [0, 64]");
    }
    if (static_cast<std::size_t>(width) > remaining()) {
        throw StreamExhausted("read past end of bit stream", cursor_);
    }
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i) {
        value = (value << 1) | static_cast<std::uint64_t>(read_bit());
    }
    return value;
}

bool BitReader::only_zeros_remain() const {
    for (std::size_t i = cursor_; i < size_; ++i) {
        if ((bytes_[i >> 3] >> (7 - (i & 7))) & 1u) {
            return false;
        }
    }
    return true;
}

void BitReader::seek(std::size_t position) {
    if (position > size_) {
        throw DomainError("seek beyond end of bit stream");
    }
    cursor_ = position;
}

}  // namespace udc
