#include "udc/bell.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <numbers>

#include "udc/analysis.hpp"
#include "udc/codec.hpp"
#include "udc/densities.hpp"
#include "udc/errors.hpp"
#include "udc/statistics.hpp"

namespace udc::bell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SchemeConfig scheme(const Config& cfg) {
    SchemeConfig s;
    s.variant = Variant::Bounded;
    s.n = 1;
    s.k_max = cfg.k_max;
    s.max_retries = cfg.max_retries;
    return s;
}

AxisBox half(bool upper) {
    return upper ? AxisBox({0.5}, {1.0}) : AxisBox({0.0}, {0.5});
}

}  // namespace

double unit_phase(double theta_a, int y_a) {
    if (y_a != 1 && y_a != -1) {
        throw DomainError("y_A must be +1 or -1");
    }
    const double u = theta_a / kTwoPi + (1 - y_a) / 4.0;
    const double r = u - std::floor(u);
    return r >= 1.0 ? 0.0 : r;
}

AliceMessage alice_round(double theta_a, const Config& cfg, Rng& rng) {
    AliceMessage msg;
    msg.y_a = (rng() >> 63) ? 1 : -1;
    const auto f = std::make_shared<BellUnit>(unit_phase(theta_a, msg.y_a));
    const SchemeConfig sc = scheme(cfg);
    if (cfg.wire == Wire::Direct || !f->wraps()) {
        if (cfg.wire == Wire::TwoPiece) {
            msg.codeword.push_back(false);
        }
        const Encoded e = encode_density(*f, sc, rng);
        msg.codeword.append(e.bits);
        msg.retries = e.retries;
        return msg;
    }
    // Sample from f, then run the superlevel scheme on the conditional density
    // of the half that received the sample.
    for (int retry = 0;; ++retry) {
        auto x = f->sample(rng);
        x[0] = std::min(x[0], std::nextafter(1.0, 0.0));
        const bool upper = x[0] >= 0.5;
        const RestrictedDensity piece(f, half(upper));
        const double z = piece.eval(x) * (1.0 - uniform01(rng));
        try {
            if (!(z > 0.0)) {
                throw DepthExhausted(Cube{cfg.k_max, {0}});
            }
            const Cube c = superlevel_cube(piece, x, z, sc);
            msg.codeword.push_back(upper);
            msg.codeword.append(serialize_bounded(c));
            msg.retries = retry;
            return msg;
        } catch (const DepthExhausted&) {
            if (retry >= cfg.max_retries) {
                throw;
            }
        }
    }
}

int bob_round(const BitString& codeword, double theta_b, const Config& cfg, Rng& rng) {
    BitReader reader(codeword);
    if (cfg.wire == Wire::TwoPiece) {
        reader.read_bit();  // the piece is implied by the cube itself
    }
    const Decoded d = decode(reader, scheme(cfg), rng);
    const double x = kTwoPi * d.x[0];
    return std::cos(x - theta_b) >= 0.0 ? -1 : 1;
}

Round play_round(double theta_a, double theta_b, const Config& cfg, Rng& rng) {
    Round r;
    r.theta_a = theta_a;
    r.theta_b = theta_b;
    const AliceMessage msg = alice_round(theta_a, cfg, rng);
    r.y_a = msg.y_a;
    r.y_b = bob_round(msg.codeword, theta_b, cfg, rng);
    r.bits_used = msg.codeword.size();
    return r;
}

Correlation correlation_experiment(double theta_a, double theta_b, std::size_t rounds, const Config& cfg, Rng& rng) {
    if (rounds < 1) {
        throw DomainError("correlation experiment needs at least one round");
    }
    RunningStats product, bits;
    std::size_t ya_plus = 0, yb_plus = 0, retries = 0, max_bits = 0;
    for (std::size_t i = 0; i < rounds; ++i) {
        const AliceMessage msg = alice_round(theta_a, cfg, rng);
        const int y_b = bob_round(msg.codeword, theta_b, cfg, rng);
        product.add(static_cast<double>(msg.y_a * y_b));
        bits.add(static_cast<double>(msg.codeword.size()));
        max_bits = std::max(max_bits, msg.codeword.size());
        ya_plus += msg.y_a == 1;
        yb_plus += y_b == 1;
        retries += static_cast<std::size_t>(msg.retries);
    }
    Correlation c;
    c.estimate = product.mean();
    c.stderr_ = product.stderr_of_mean();
    c.mean_bits = bits.mean();
    c.max_bits = max_bits;
    c.p_ya_plus = static_cast<double>(ya_plus) / static_cast<double>(rounds);
    c.p_yb_plus = static_cast<double>(yb_plus) / static_cast<double>(rounds);
    c.rounds = rounds;
    c.retries = retries;
    return c;
}

std::size_t max_round_bits(int k_max) {
    // n k + 2 log(k+1) + 1 for the codeword, plus the piece bit
    return static_cast<std::size_t>(k_max) + 2 * static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(k_max + 1)) - 1) + 2;
}

Sweep length_sweep(std::span<const double> thetas, int k_max) {
    Sweep s;
    bool first = true;
    for (double theta : thetas) {
        if (!(theta >= 0.0 && theta < 1.0)) {
            throw DomainError("sweep phases must lie in [0, 1)");
        }
        const auto f = std::make_shared<BellUnit>(theta);
        const LengthReport direct = expected_length(*f, Variant::Bounded, k_max);
        SweepPoint p;
        p.theta = theta;
        p.wraps = f->wraps();
        p.mean_length = direct.mean_length;
        p.mean_length_lower = direct.mean_length_lower;
        p.mean_length_upper = direct.mean_length_upper;
        p.residual = direct.residual_mass;
        if (p.wraps) {
            double mean = 1.0, upper = 1.0;
            for (bool up : {false, true}) {
                const RestrictedDensity piece(f, half(up));
                const LengthReport r = expected_length(piece, Variant::Bounded, k_max);
                mean += piece.piece_mass() * r.mean_length;
                upper += piece.piece_mass() * r.mean_length_upper;
            }
            p.two_piece_mean = mean;
            p.two_piece_upper = upper;
        } else {
            p.two_piece_mean = 1.0 + direct.mean_length;
            p.two_piece_upper = 1.0 + direct.mean_length_upper;
        }
        if (first || p.mean_length > s.max_mean) {
            s.max_mean = p.mean_length;
            s.argmax_theta = theta;
        }
        s.max_upper = first ? p.mean_length_upper : std::max(s.max_upper, p.mean_length_upper);
        s.max_two_piece = first ? p.two_piece_mean : std::max(s.max_two_piece, p.two_piece_mean);
        first = false;
        s.points.push_back(p);
    }
    return s;
}

std::vector<double> uniform_theta_grid(int count) {
    if (count < 1) {
        throw DomainError("theta grid needs at least one point");
    }
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) {
        grid[i] = static_cast<double>(i) / count;
    }
    return grid;
}

}  // namespace udc::bell
