#include "udc/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "udc/errors.hpp"
#include "udc/integer_codes.hpp"

namespace udc {

std::string to_string(Variant v) {
    return v == Variant::Unbounded ? "unbounded" : "bounded";
}

Variant parse_variant(const std::string& text) {
    if (text == "unbounded") {
        return Variant::Unbounded;
    }
    if (text == "bounded") {
        return Variant::Bounded;
    }
    throw DomainError("unknown scheme variant '" + text + "'");
}

void SchemeConfig::validate() const {
    if (n < 1) {
        throw DomainError("scheme dimension must be >= 1");
    }
    if (k_max < 1) {
        throw DomainError("k_max must be >= 1");
    }
    if (variant == Variant::Bounded && k_max > 62) {
        throw DomainError("bounded scheme supports k_max <= 62");
    }
    if (decode_zero_cap < 1) {
        throw DomainError("decode zero cap must be >= 1");
    }
    if (max_retries < 0) {
        throw DomainError("max_retries must be >= 0");
    }
}

DecompositionLimits SchemeConfig::limits() const {
    DecompositionLimits l;
    l.k_max = k_max;
    if (variant == Variant::Bounded) {
        l.root_level = 0;
    }
    return l;
}

BitString serialize_unbounded(const Cube& c) {
    BitString out;
    codes::append_delta_signed(out, c.k);
    for (std::int64_t v : c.v) {
        codes::append_delta_signed(out, v);
    }
    return out;
}

BitString serialize_bounded(const Cube& c) {
    if (c.k < 0 || c.k > 62) {
        throw DomainError("bounded codewords need 0 <= k <= 62");
    }
    BitString out;
    codes::append_gamma_plus(out, static_cast<std::uint64_t>(c.k) + 1);
    for (std::int64_t v : c.v) {
        if (v < 0 || v >= (std::int64_t{1} << c.k)) {
            throw DomainError("bounded coordinate " + std::to_string(v) + " outside [0, 2^" +
                              std::to_string(c.k) + ")");
        }
        codes::append_fixed(out, static_cast<std::uint64_t>(v), c.k);
    }
    return out;
}

BitString serialize(const Cube& c, Variant variant) {
    return variant == Variant::Unbounded ? serialize_unbounded(c) : serialize_bounded(c);
}

int codeword_length(const Cube& c, Variant variant) {
    if (variant == Variant::Unbounded) {
        int len = codes::delta_signed_length(c.k);
        for (std::int64_t v : c.v) {
            len += codes::delta_signed_length(v);
        }
        return len;
    }
    if (c.k < 0) {
        throw DomainError("bounded codewords need k >= 0");
    }
    return c.dimension() * c.k + 2 * codes::floor_log2(static_cast<std::uint64_t>(c.k) + 1) + 1;
}

Cube parse_cube(BitReader& reader, const SchemeConfig& cfg) {
    const std::size_t start = reader.position();
    Cube c;
    c.v.resize(cfg.n);
    if (cfg.variant == Variant::Unbounded) {
        const std::int64_t k = codes::decode_delta_signed(reader, cfg.decode_zero_cap);
        if (k < -1'000'000 || k > 1'000'000) {
            throw MalformedCodeword("level " + std::to_string(k) + " is out of range", start);
        }
        c.k = static_cast<int>(k);
        for (auto& v : c.v) {
            v = codes::decode_delta_signed(reader, cfg.decode_zero_cap);
        }
        return c;
    }
    const std::uint64_t k1 = codes::decode_gamma_plus(reader, cfg.decode_zero_cap);
    if (k1 > 63) {
        throw MalformedCodeword("bounded level " + std::to_string(k1 - 1) + " is out of range", start);
    }
    c.k = static_cast<int>(k1 - 1);
    for (auto& v : c.v) {
        v = static_cast<std::int64_t>(codes::decode_fixed(reader, c.k));
    }
    return c;
}

namespace {

void check_bounded_support(const AxisBox& support) {
    if (!AxisBox::unit(support.dimension()).contains(support)) {
        throw DomainError("bounded scheme needs support inside the unit cube");
    }
}

/// Half-open location needs x < 1 on the unit cube.
void clamp_unit(std::vector<double>& x) {
    for (double& xi : x) {
        xi = std::clamp(xi, 0.0, std::nextafter(1.0, 0.0));
    }
}

template <class Attempt>
Encoded with_retries(const SchemeConfig& cfg, Attempt&& attempt) {
    for (int retry = 0;; ++retry) {
        try {
            Encoded e = attempt();
            e.retries = retry;
            return e;
        } catch (const DepthExhausted&) {
            if (retry >= cfg.max_retries) {
                throw;
            }
        }
    }
}

}  // namespace

Encoded encode_uniform(const Region& region, const SchemeConfig& cfg, Rng& rng) {
    cfg.validate();
    if (region.dimension() != cfg.n) {
        throw DomainError("region dimension does not match the scheme");
    }
    if (cfg.variant == Variant::Bounded) {
        check_bounded_support(region.bounding_box());
    }
    return with_retries(cfg, [&] {
        Encoded e;
        e.x = sample_uniform(region, rng);
        if (cfg.variant == Variant::Bounded) {
            clamp_unit(e.x);
        }
        e.cube = locate(e.x, region, cfg.limits());
        e.bits = serialize(e.cube, cfg.variant);
        return e;
    });
}

Cube superlevel_cube(const Density& f, std::span<const double> x, double z, const SchemeConfig& cfg) {
    const SuperlevelRegion level(f, z);
    return locate(x, level, cfg.limits());
}

Encoded encode_density(const Density& f, const SchemeConfig& cfg, Rng& rng) {
    cfg.validate();
    if (f.dimension() != cfg.n) {
        throw DomainError("density dimension does not match the scheme");
    }
    if (cfg.variant == Variant::Bounded) {
        check_bounded_support(f.support_box());
    }
    return with_retries(cfg, [&] {
        Encoded e;
        e.x = f.sample(rng);
        if (cfg.variant == Variant::Bounded) {
            clamp_unit(e.x);
        }
        const double fx = f.eval(e.x);
        const double z = fx * (1.0 - uniform01(rng));  // Unif(0, f(x)]
        if (!(z > 0.0)) {
            throw DepthExhausted(Cube{cfg.k_max, std::vector<std::int64_t>(cfg.n, 0)});
        }
        e.cube = superlevel_cube(f, e.x, z, cfg);
        e.bits = serialize(e.cube, cfg.variant);
        return e;
    });
}

std::vector<double> sample_in_cube(const Cube& c, Rng& rng) {
    std::vector<double> x(c.v.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::ldexp(static_cast<double>(c.v[i]) + uniform01(rng), -c.k);
    }
    return x;
}

Decoded decode(BitReader& reader, const SchemeConfig& cfg, Rng& rng) {
    Decoded d;
    d.cube = parse_cube(reader, cfg);
    d.x = sample_in_cube(d.cube, rng);
    return d;
}

Decoded decode(const BitString& bits, const SchemeConfig& cfg, Rng& rng) {
    BitReader reader(bits);
    return decode(reader, cfg, rng);
}

// ------------------------------------------------------------------ streams

namespace {

constexpr char kMagic[4] = {'U', 'D', 'C', 'S'};

}  // namespace

StreamWriter::StreamWriter(StreamHeader header) : header_(header) {
    if (header_.n < 1 || header_.n > 255) {
        throw DomainError("stream dimension must be in 1..255");
    }
}

void StreamWriter::append(const BitString& codeword) {
    body_.append(codeword);
    ++count_;
}

std::vector<std::uint8_t> StreamWriter::bytes() const {
    std::vector<std::uint8_t> out(kMagic, kMagic + 4);
    out.push_back(kStreamVersion);
    out.push_back(static_cast<std::uint8_t>(header_.variant));
    out.push_back(static_cast<std::uint8_t>(header_.n));
    out.insert(out.end(), body_.bytes().begin(), body_.bytes().end());
    return out;
}

namespace {

StreamHeader parse_header(std::span<const std::uint8_t> file) {
    if (file.size() < kStreamHeaderSize) {
        throw MalformedCodeword("stream shorter than its header", 0);
    }
    if (std::memcmp(file.data(), kMagic, 4) != 0) {
        throw MalformedCodeword("bad stream magic", 0);
    }
    if (file[4] != kStreamVersion) {
        throw MalformedCodeword("unsupported stream version " + std::to_string(file[4]), 0);
    }
    if (file[5] > 1) {
        throw MalformedCodeword("unknown variant byte " + std::to_string(file[5]), 0);
    }
    if (file[6] == 0) {
        throw MalformedCodeword("stream dimension is zero", 0);
    }
    return {static_cast<Variant>(file[5]), file[6]};
}

}  // namespace

StreamReader::StreamReader(std::span<const std::uint8_t> file)
    : header_(parse_header(file)),
      reader_(file.subspan(std::min(file.size(), kStreamHeaderSize)),
              (file.size() - std::min(file.size(), kStreamHeaderSize)) * 8) {}

std::optional<Cube> StreamReader::next(int decode_zero_cap) {
    if (reader_.remaining() < 8 && reader_.only_zeros_remain()) {
        return std::nullopt;
    }
    SchemeConfig cfg;
    cfg.variant = header_.variant;
    cfg.n = header_.n;
    cfg.decode_zero_cap = decode_zero_cap;
    return parse_cube(reader_, cfg);
}

}  // namespace udc
