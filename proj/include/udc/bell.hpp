#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udc/bits.hpp"
#include "udc/random.hpp"

namespace udc::bell {

/// How Alice's bounded codeword is framed on the wire.
enum class Wire {
    /// One leading bit names the half of [0,1] holding the sample whenever the
    /// support wraps (0 otherwise); the piece's conditional density is encoded.
    TwoPiece,
    /// The full density is encoded directly, no extra bit.
    Direct,
};

struct Config {
    int k_max = 40;
    Wire wire = Wire::TwoPiece;
    int max_retries = 64;
};

/// Phase on [0,1) of Alice's conditional density after absorbing y_A:
/// (theta_A / 2 pi + (1 - y_A) / 4) mod 1.
double unit_phase(double theta_a, int y_a);

struct AliceMessage {
    int y_a = 1;
    BitString codeword;
    int retries = 0;
};

AliceMessage alice_round(double theta_a, const Config& cfg, Rng& rng);

/// Decodes X in [0,1], rescales to [0, 2 pi], returns -sgn(cos(X - theta_B))
/// with sgn(0) = +1.
int bob_round(const BitString& codeword, double theta_b, const Config& cfg, Rng& rng);

struct Round {
    double theta_a = 0.0;
    double theta_b = 0.0;
    int y_a = 1;
    int y_b = 1;
    std::size_t bits_used = 0;
};

Round play_round(double theta_a, double theta_b, const Config& cfg, Rng& rng);

struct Correlation {
    double estimate = 0.0;  // mean of y_A y_B
    double stderr_ = 0.0;
    double mean_bits = 0.0;
    std::size_t max_bits = 0;
    double p_ya_plus = 0.0;
    double p_yb_plus = 0.0;
    std::size_t rounds = 0;
    std::size_t retries = 0;
};

Correlation correlation_experiment(double theta_a, double theta_b, std::size_t rounds, const Config& cfg, Rng& rng);

/// Upper limit on the bits of one round at depth k_max.
std::size_t max_round_bits(int k_max);

struct SweepPoint {
    double theta = 0.0;
    bool wraps = false;
    // direct bounded scheme
    double mean_length = 0.0;
    double mean_length_lower = 0.0;
    double mean_length_upper = 0.0;
    double residual = 0.0;
    // two-piece wire (prefix bit plus piece codeword)
    double two_piece_mean = 0.0;
    double two_piece_upper = 0.0;
};

struct Sweep {
    std::vector<SweepPoint> points;
    double max_mean = 0.0;
    double argmax_theta = 0.0;
    double max_upper = 0.0;
    double max_two_piece = 0.0;
};

/// Enumerated expected lengths of bell_unit(theta) under the bounded scheme.
Sweep length_sweep(std::span<const double> thetas, int k_max);

/// {i / count : i = 0..count-1}.
std::vector<double> uniform_theta_grid(int count);

}  // namespace udc::bell
