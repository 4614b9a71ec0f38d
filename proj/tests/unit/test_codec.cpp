#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "udc/codec.hpp"
#include "udc/densities.hpp"
#include "udc/errors.hpp"
#include "udc/integer_codes.hpp"
#include "udc/statistics.hpp"

namespace udc {
namespace {

const std::vector<double> kEllipseK = {4.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0, 4.0 / 3.0};

SchemeConfig scheme(Variant v, int n, int k_max = 40) {
    SchemeConfig cfg;
    cfg.variant = v;
    cfg.n = n;
    cfg.k_max = k_max;
    return cfg;
}

struct FigureEntry {
    Cube cube;
    const char* bits;
};

// The twelve labelled cubes of the two-dimensional grid figure.
const std::vector<FigureEntry> kFigure = {
    {{0, {-1, 0}}, "101011"},           {{0, {0, 0}}, "111"},
    {{0, {-1, -1}}, "101010101"},       {{0, {0, -1}}, "110101"},
    {{1, {0, 1}}, "010010100"},         {{1, {1, 1}}, "010001000100"},
    {{1, {0, 0}}, "010011"},            {{1, {1, 0}}, "010001001"},
    {{2, {2, 3}}, "011000110001110"},   {{2, {3, 3}}, "011000111001110"},
    {{2, {2, 2}}, "011000110001100"},   {{2, {3, 2}}, "011000111001100"},
};

TEST(SerializeUnbounded, FigureCodewords) {
    for (const auto& [cube, bits] : kFigure) {
        EXPECT_EQ(serialize_unbounded(cube).to_string(), bits);
        EXPECT_EQ(codeword_length(cube, Variant::Unbounded), static_cast<int>(std::string(bits).size()));
        BitReader r(BitString::from_string(bits));
        EXPECT_EQ(parse_cube(r, scheme(Variant::Unbounded, 2)), cube);
        EXPECT_TRUE(r.at_end());
    }
}

TEST(SerializeUnbounded, LengthIsSumOfComponentLengths) {
    Rng rng = make_rng(1);
    std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
    for (int t = 0; t < 2000; ++t) {
        const Cube c{static_cast<int>(dist(rng) / 100), {dist(rng), dist(rng), dist(rng)}};
        int expected = codes::delta_signed_length(c.k);
        for (auto v : c.v) {
            expected += codes::delta_signed_length(v);
        }
        ASSERT_EQ(static_cast<int>(serialize_unbounded(c).size()), expected);
        ASSERT_EQ(codeword_length(c, Variant::Unbounded), expected);
    }
}

TEST(SerializeBounded, Examples) {
    EXPECT_EQ(serialize_bounded(Cube{0, {0}}).to_string(), "1");
    EXPECT_EQ(serialize_bounded(Cube{2, {3}}).to_string(), "01111");
    EXPECT_EQ(serialize_bounded(Cube{1, {0, 1}}).to_string(), "01001");
    EXPECT_THROW(serialize_bounded(Cube{2, {4}}), DomainError);
    EXPECT_THROW(serialize_bounded(Cube{1, {-1}}), DomainError);
    EXPECT_THROW(serialize_bounded(Cube{-1, {0}}), DomainError);
}

TEST(SerializeBounded, LengthLaw) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 0; k <= 40; ++k) {
            const Cube c{k, std::vector<std::int64_t>(n, (std::int64_t{1} << k) - 1)};
            int floor_log = 0;
            while ((2 << floor_log) <= k + 1) {
                ++floor_log;
            }
            ASSERT_EQ(static_cast<int>(serialize_bounded(c).size()), n * k + 2 * floor_log + 1);
            ASSERT_EQ(codeword_length(c, Variant::Bounded), n * k + 2 * floor_log + 1);
        }
    }
}

TEST(SchemeConfig, Validation) {
    EXPECT_THROW(scheme(Variant::Unbounded, 0).validate(), DomainError);
    EXPECT_THROW(scheme(Variant::Unbounded, 1, 0).validate(), DomainError);
    EXPECT_NO_THROW(scheme(Variant::Bounded, 3, 20).validate());
    EXPECT_EQ(scheme(Variant::Bounded, 1).limits().root_level, 0);
    EXPECT_FALSE(scheme(Variant::Unbounded, 1).limits().root_level.has_value());
    EXPECT_EQ(parse_variant("bounded"), Variant::Bounded);
    EXPECT_EQ(to_string(Variant::Unbounded), "unbounded");
    EXPECT_THROW(parse_variant("sideways"), DomainError);
}

TEST(EncodeUniform, SingleCubeSets) {
    Rng rng = make_rng(2);
    const BoxRegion square(AxisBox::unit(2));
    for (int t = 0; t < 100; ++t) {
        EXPECT_EQ(encode_uniform(square, scheme(Variant::Unbounded, 2), rng).bits.to_string(), "111");
        EXPECT_EQ(encode_uniform(square, scheme(Variant::Bounded, 2), rng).bits.to_string(), "1");
    }
    const UniformOn f(std::make_shared<BoxRegion>(AxisBox::unit(2)));
    EXPECT_EQ(encode_density(f, scheme(Variant::Unbounded, 2), rng).bits.to_string(), "111");
}

TEST(EncodeUniform, IntervalFrequencies) {
    Rng rng = make_rng(3);
    const BoxRegion line(AxisBox({0.0}, {0.75}));
    const int trials = 100000;
    std::map<std::string, int> counts;
    for (int t = 0; t < trials; ++t) {
        ++counts[encode_uniform(line, scheme(Variant::Unbounded, 1), rng).bits.to_string()];
    }
    ASSERT_EQ(counts.size(), 2u);
    const double p = 2.0 / 3.0;
    const double sigma = std::sqrt(trials * p * (1 - p));
    EXPECT_NEAR(counts["01001"], trials * p, 3.0 * sigma);
    // g(2) || g(2); g(2) = "01100" is the k = 2 prefix of the grid-figure codewords
    EXPECT_NEAR(counts["0110001100"], trials * (1 - p), 3.0 * sigma);
}

TEST(EncodeUniform, RejectsMismatchedSetups) {
    Rng rng = make_rng(4);
    const BoxRegion square(AxisBox::unit(2));
    EXPECT_THROW(encode_uniform(square, scheme(Variant::Unbounded, 1), rng), DomainError);
    const BoxRegion wide(AxisBox({0.0}, {1.5}));
    EXPECT_THROW(encode_uniform(wide, scheme(Variant::Bounded, 1), rng), DomainError);
    EXPECT_THROW(encode_density(Gaussian1d(), scheme(Variant::Bounded, 1), rng), DomainError);
}

TEST(EncodeDensity, RetriesAreCounted) {
    // A shallow cap forces frequent depth exhaustion; retries must absorb it.
    Rng rng = make_rng(5);
    SchemeConfig cfg = scheme(Variant::Unbounded, 1, 2);
    cfg.max_retries = 1000;
    int retries = 0;
    for (int t = 0; t < 200; ++t) {
        const Encoded e = encode_density(Gaussian1d(), cfg, rng);
        EXPECT_LE(e.cube.k, 2);
        retries += e.retries;
    }
    EXPECT_GT(retries, 0);
    cfg.max_retries = 0;
    int failures = 0;
    for (int t = 0; t < 200; ++t) {
        try {
            encode_density(Gaussian1d(), cfg, rng);
        } catch (const DepthExhausted&) {
            ++failures;
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(Decode, Examples) {
    Rng rng = make_rng(6);
    const Decoded a = decode(BitString::from_string("111"), scheme(Variant::Unbounded, 2), rng);
    EXPECT_EQ(a.cube, Cube({0, {0, 0}}));
    EXPECT_TRUE(AxisBox::unit(2).contains(a.x));

    for (int t = 0; t < 1000; ++t) {
        const Decoded b = decode(BitString::from_string("01111"), scheme(Variant::Bounded, 1), rng);
        ASSERT_EQ(b.cube, Cube({2, {3}}));
        ASSERT_GE(b.x[0], 0.75);
        ASSERT_LE(b.x[0], 1.0);
    }

    try {
        decode(BitString::from_string("0"), scheme(Variant::Unbounded, 1), rng);
        FAIL();
    } catch (const StreamExhausted& e) {
        EXPECT_EQ(e.bit_offset(), 0u);
    }
    EXPECT_THROW(decode(BitString::from_string("0"), scheme(Variant::Bounded, 1), rng), DecodeError);
}

TEST(Decode, UniformInsideTheCube) {
    Rng rng = make_rng(7);
    const Cube c{3, {-5, 2}};
    std::vector<double> xs;
    for (int t = 0; t < 100000; ++t) {
        const auto x = sample_in_cube(c, rng);
        ASSERT_TRUE(cube_box(c).contains(x));
        xs.push_back(x[0]);
    }
    EXPECT_LT(ks_statistic(xs, [](double x) { return std::clamp((x + 5.0 / 8.0) * 8.0, 0.0, 1.0); }), 0.01);
}

TEST(EndToEnd, CubeFidelityAndDistribution) {
    const std::vector<std::pair<std::shared_ptr<const Density>, SchemeConfig>> cases = {
        {std::make_shared<Gaussian1d>(), scheme(Variant::Unbounded, 1, 30)},
        {std::make_shared<ShiftedExponential>(1.0), scheme(Variant::Unbounded, 1, 30)},
        {std::make_shared<BellUnit>(0.3), scheme(Variant::Bounded, 1, 30)},
        {std::make_shared<BellUnit>(0.9), scheme(Variant::Bounded, 1, 30)},
        {std::make_shared<BellCosine>(1.0, -1), scheme(Variant::Unbounded, 1, 30)},
    };
    Rng rng = make_rng(8);
    for (auto [f, cfg] : cases) {
        cfg.max_retries = 100;
        std::vector<double> xs;
        for (int t = 0; t < 20000; ++t) {
            const Encoded e = encode_density(*f, cfg, rng);
            ASSERT_TRUE(cube_box(e.cube).contains(e.x)) << f->name();
            const Decoded d = decode(e.bits, cfg, rng);
            ASSERT_EQ(d.cube, e.cube) << f->name();
            xs.push_back(d.x[0]);
        }
        EXPECT_LT(ks_statistic(xs, [&](double x) { return cdf_1d(*f, x); }), 0.015) << f->name();
    }
}

TEST(EndToEnd, EllipseCubeFidelity) {
    Rng rng = make_rng(9);
    const EllipsoidRegion ellipse(kEllipseK);
    SchemeConfig cfg = scheme(Variant::Unbounded, 2, 30);
    cfg.max_retries = 100;
    for (int t = 0; t < 2000; ++t) {
        const Encoded e = encode_uniform(ellipse, cfg, rng);
        const Decoded d = decode(e.bits, cfg, rng);
        ASSERT_EQ(d.cube, e.cube);
        ASSERT_TRUE(ellipse.contains(d.x));
    }
}

TEST(Stream, FiveSingleCubeCodewords) {
    StreamWriter w({Variant::Unbounded, 2});
    for (int i = 0; i < 5; ++i) {
        w.append(BitString::from_string("111"));
    }
    const auto bytes = w.bytes();
    ASSERT_EQ(bytes.size(), kStreamHeaderSize + 2);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "UDCS");
    EXPECT_EQ(bytes[4], kStreamVersion);
    EXPECT_EQ(bytes[5], 0);
    EXPECT_EQ(bytes[6], 2);
    EXPECT_EQ(bytes[7], 0xFF);
    EXPECT_EQ(bytes[8], 0xFE);

    StreamReader r(bytes);
    EXPECT_EQ(r.header().n, 2);
    int count = 0;
    while (auto c = r.next()) {
        EXPECT_EQ(*c, Cube({0, {0, 0}}));
        ++count;
    }
    EXPECT_EQ(count, 5);
}

TEST(Stream, HundredCodewordsResegment) {
    Rng rng = make_rng(10);
    for (Variant v : {Variant::Unbounded, Variant::Bounded}) {
        const SchemeConfig cfg = scheme(v, 1, 30);
        const BellUnit f(0.4);
        StreamWriter w({v, 1});
        std::vector<Cube> sent;
        for (int i = 0; i < 100; ++i) {
            SchemeConfig retrying = cfg;
            retrying.max_retries = 100;
            const Encoded e = encode_density(f, retrying, rng);
            w.append(e.bits);
            sent.push_back(e.cube);
        }
        const auto bytes = w.bytes();
        StreamReader r(bytes);
        std::vector<Cube> got;
        while (auto c = r.next()) {
            got.push_back(*c);
        }
        EXPECT_EQ(got, sent) << to_string(v);
    }
}

TEST(Stream, MalformedInputs) {
    const std::vector<std::uint8_t> bad_magic = {'U', 'D', 'C', 'X', 1, 0, 1};
    EXPECT_THROW(StreamReader{bad_magic}, MalformedCodeword);
    const std::vector<std::uint8_t> short_header = {'U', 'D', 'C'};
    EXPECT_THROW(StreamReader{short_header}, MalformedCodeword);
    const std::vector<std::uint8_t> bad_variant = {'U', 'D', 'C', 'S', 1, 7, 1};
    EXPECT_THROW(StreamReader{bad_variant}, MalformedCodeword);

    // seven zeros then a one open a long codeword that the body cannot complete
    std::vector<std::uint8_t> truncated = {'U', 'D', 'C', 'S', 1, 0, 1, 0x01};
    StreamReader r(truncated);
    EXPECT_THROW(r.next(), DecodeError);
}

}  // namespace
}  // namespace udc
