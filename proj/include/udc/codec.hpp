#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "udc/bits.hpp"
#include "udc/densities.hpp"
#include "udc/dyadic.hpp"
#include "udc/geometry.hpp"
#include "udc/random.hpp"
#include "udc/regions.hpp"

namespace udc {

enum class Variant : std::uint8_t { Unbounded = 0, Bounded = 1 };

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// Out-of-band agreement between encoder and decoder.
struct SchemeConfig {
    Variant variant = Variant::Unbounded;
    int n = 1;
    int k_max = kDefaultLocateDepth;
    int decode_zero_cap = 64;
    /// Fresh samples drawn after a depth-exhausted locate before giving up.
    int max_retries = 0;

    void validate() const;
    DecompositionLimits limits() const;
};

/// g_delta(k) || g_delta(v_1) || ... || g_delta(v_n).
BitString serialize_unbounded(const Cube& c);
/// g_gamma+(k+1) || k-bit v_1 || ... || k-bit v_n, for k >= 0 and 0 <= v_i < 2^k.
BitString serialize_bounded(const Cube& c);
BitString serialize(const Cube& c, Variant variant);
/// Length of serialize(c, variant) from the closed-form length laws.
int codeword_length(const Cube& c, Variant variant);

/// Reads one codeword; consumes exactly its bits.
Cube parse_cube(BitReader& reader, const SchemeConfig& cfg);

struct Encoded {
    BitString bits;
    Cube cube;
    std::vector<double> x;  // the encoder's internal sample
    int retries = 0;
};

Encoded encode_uniform(const Region& region, const SchemeConfig& cfg, Rng& rng);
Encoded encode_density(const Density& f, const SchemeConfig& cfg, Rng& rng);

/// Literal superlevel scheme: given the encoder's sample x and level z, the cube sent.
Cube superlevel_cube(const Density& f, std::span<const double> x, double z, const SchemeConfig& cfg);

struct Decoded {
    std::vector<double> x;
    Cube cube;
};

/// Parses a codeword and draws x uniformly from its cube.
Decoded decode(BitReader& reader, const SchemeConfig& cfg, Rng& rng);
Decoded decode(const BitString& bits, const SchemeConfig& cfg, Rng& rng);

/// Uniform point of a cube, one draw per coordinate.
std::vector<double> sample_in_cube(const Cube& c, Rng& rng);

// ---- stream files: "UDCS" | version u8 | variant u8 | n u8 | packed codewords

inline constexpr std::uint8_t kStreamVersion = 1;
inline constexpr std::size_t kStreamHeaderSize = 7;

struct StreamHeader {
    Variant variant = Variant::Unbounded;
    int n = 1;
};

class StreamWriter {
public:
    explicit StreamWriter(StreamHeader header);
    void append(const BitString& codeword);
    std::size_t count() const noexcept { return count_; }
    /// Header followed by the zero-padded body.
    std::vector<std::uint8_t> bytes() const;

private:
    StreamHeader header_;
    BitString body_;
    std::size_t count_ = 0;
};

class StreamReader {
public:
    /// Throws MalformedCodeword (offset 0) on a bad header. `file` must outlive the reader.
    explicit StreamReader(std::span<const std::uint8_t> file);

    const StreamHeader& header() const noexcept { return header_; }
    /// Next cube, or nullopt at the end (fewer than 8 bits left, all zero).
    std::optional<Cube> next(int decode_zero_cap = 64);
    /// Bit offset within the body.
    std::size_t position() const noexcept { return reader_.position(); }

private:
    StreamHeader header_;
    BitReader reader_;
};

}  // namespace udc
