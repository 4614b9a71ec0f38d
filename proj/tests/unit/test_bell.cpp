#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "udc/analysis.hpp"
#include "udc/bell.hpp"
#include "udc/bounds.hpp"
#include "udc/codec.hpp"
#include "udc/densities.hpp"
#include "udc/errors.hpp"

namespace udc {
namespace {

constexpr double kPi = std::numbers::pi;

bell::Config config(bell::Wire wire, int k_max = 30) {
    bell::Config cfg;
    cfg.wire = wire;
    cfg.k_max = k_max;
    return cfg;
}

TEST(Bell, UnitPhase) {
    EXPECT_DOUBLE_EQ(bell::unit_phase(0.0, 1), 0.0);
    EXPECT_DOUBLE_EQ(bell::unit_phase(0.0, -1), 0.5);
    EXPECT_NEAR(bell::unit_phase(kPi, 1), 0.5, 1e-15);
    EXPECT_NEAR(bell::unit_phase(kPi, -1), 0.0, 1e-15);
    EXPECT_NEAR(bell::unit_phase(-kPi / 2, 1), 0.75, 1e-15);
    for (double t = -10.0; t < 10.0; t += 0.37) {
        const double p = bell::unit_phase(t, -1);
        EXPECT_GE(p, 0.0);
        EXPECT_LT(p, 1.0);
    }
}

TEST(Bell, UnitPhaseMatchesCosineReading) {
    // pi max(cos(2 pi (u - phase)), 0) at u = x / 2 pi equals 2 pi f(x | y_A; theta_A)
    for (int y : {1, -1}) {
        for (double theta : {0.3, 2.0, 5.9}) {
            const BellUnit unit(bell::unit_phase(theta, y));
            const BellCosine cosine(theta, y);
            for (double x = 0.05; x < 2 * kPi; x += 0.31) {
                const double u[1] = {x / (2 * kPi)};
                const double p[1] = {x};
                ASSERT_NEAR(unit.eval(u), 2 * kPi * cosine.eval(p), 1e-12);
                ASSERT_NEAR(cosine.eval(p), 0.5 * std::max(y * std::cos(x - theta), 0.0), 1e-12);
            }
        }
    }
}

TEST(Bell, BobSignConvention) {
    // the decoded point is uniform in the cube [0.5, 0.5 + 2^-10], i.e. x near pi
    Rng rng = make_rng(1);
    const BitString cube = serialize_bounded(Cube{10, {512}});
    EXPECT_EQ(bell::bob_round(cube, kPi, config(bell::Wire::Direct), rng), -1);
    EXPECT_EQ(bell::bob_round(cube, 0.0, config(bell::Wire::Direct), rng), 1);
    EXPECT_EQ(bell::bob_round(BitString::from_string("0") + cube, kPi, config(bell::Wire::TwoPiece), rng), -1);
}

TEST(Bell, MarginalsAndCorrelationExamples) {
    Rng rng = make_rng(2);
    const std::size_t rounds = 100000;
    const auto check = [&](double ta, double tb, bell::Wire wire) {
        const bell::Correlation c = bell::correlation_experiment(ta, tb, rounds, config(wire), rng);
        const double sigma_p = std::sqrt(0.25 / rounds);
        EXPECT_NEAR(c.p_ya_plus, 0.5, 3.0 * sigma_p);
        EXPECT_NEAR(c.p_yb_plus, 0.5, 4.0 * sigma_p);
        EXPECT_NEAR(c.estimate, -std::cos(ta - tb), 4.0 / std::sqrt(static_cast<double>(rounds)))
            << ta << " " << tb;
        return c;
    };
    for (bell::Wire wire : {bell::Wire::TwoPiece, bell::Wire::Direct}) {
        const auto same = check(0.4, 0.4, wire);
        EXPECT_EQ(same.estimate, -1.0);  // Bob's cosine is never negative on Alice's support
        const auto opposite = check(0.0, kPi, wire);
        EXPECT_EQ(opposite.estimate, 1.0);
        check(0.0, kPi / 2, wire);
        check(0.7, 1.9, wire);
    }
}

TEST(Bell, BitsPerRoundBounded) {
    Rng rng = make_rng(3);
    for (int k_max : {8, 17, 30}) {
        const bell::Correlation c =
            bell::correlation_experiment(0.1, 2.0, 20000, config(bell::Wire::TwoPiece, k_max), rng);
        EXPECT_LE(c.max_bits, bell::max_round_bits(k_max));
        EXPECT_LE(c.mean_bits, bounds::thm3(1, std::log2(kPi)) + 1.0);
        EXPECT_GE(c.mean_bits, 1.0);
    }
    EXPECT_EQ(bell::max_round_bits(17), 17u + 8u + 2u);
}

TEST(Bell, TwoPieceWireParses) {
    Rng rng = make_rng(4);
    SchemeConfig cfg;
    cfg.variant = Variant::Bounded;
    cfg.n = 1;
    cfg.k_max = 30;
    for (int t = 0; t < 2000; ++t) {
        const bell::AliceMessage m = bell::alice_round(0.05 * t, config(bell::Wire::TwoPiece), rng);
        BitReader r(m.codeword);
        const bool piece = r.read_bit();
        const Cube c = parse_cube(r, cfg);
        ASSERT_TRUE(r.at_end());
        const AxisBox box = cube_box(c);
        if (piece) {
            ASSERT_GE(box.lower[0], 0.5);
        } else {
            ASSERT_TRUE(box.upper[0] <= 0.5 || !BellUnit(bell::unit_phase(0.05 * t, m.y_a)).wraps());
        }
    }
}

TEST(Bell, SweepPeriodicAndHalfShiftInvariant) {
    const std::vector<double> grid = bell::uniform_theta_grid(64);
    ASSERT_EQ(grid.size(), 64u);
    EXPECT_EQ(grid[32], 0.5);
    const bell::Sweep s = bell::length_sweep(grid, 12);
    for (int i = 0; i < 32; ++i) {
        EXPECT_NEAR(s.points[i].mean_length, s.points[i + 32].mean_length, 1e-9) << grid[i];
        if (grid[i] != 0.25) {  // supports (0, 1/2) and (1/2, 1) both fit without wrapping
            EXPECT_NE(s.points[i].wraps, s.points[i + 32].wraps) << grid[i];
        }
    }
    // reflection x -> 1 - x maps phase theta to 1 - theta; bounded lengths depend only on k
    for (int i = 1; i < 64; ++i) {
        EXPECT_NEAR(s.points[i].mean_length, s.points[64 - i].mean_length, 1e-9) << grid[i];
    }
    for (const auto& p : s.points) {
        EXPECT_LE(p.mean_length_lower, p.mean_length_upper);
        EXPECT_LE(p.two_piece_upper, bounds::thm3(1, std::log2(kPi)) + 1.0 + 0.01);
    }
    EXPECT_THROW(bell::length_sweep(std::vector<double>{1.0}, 12), DomainError);
}

TEST(Bell, SweepMatchesMonteCarloAtCentre) {
    const std::vector<double> grid = {0.5};
    const bell::Sweep s = bell::length_sweep(grid, 16);
    Rng rng = make_rng(5);
    const McLength mc = mc_expected_length(BellUnit(0.5), Variant::Bounded, 200000, rng, 16);
    const auto& p = s.points[0];
    EXPECT_NEAR(mc.mean, p.mean_length, 3.0 * mc.stderr_ + (p.mean_length_upper - p.mean_length_lower));
    EXPECT_NEAR(p.two_piece_mean, p.mean_length + 1.0, 1e-12);  // no wrap: the piece bit is the only overhead
}

}  // namespace
}  // namespace udc
