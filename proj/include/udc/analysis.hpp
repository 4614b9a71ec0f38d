#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udc/codec.hpp"
#include "udc/densities.hpp"
#include "udc/dyadic.hpp"
#include "udc/random.hpp"
#include "udc/regions.hpp"

namespace udc {

/// Expected codeword length from the enumerated atoms.
///
/// `mean_length` is conditional on the enumerated cubes. The bracket charges
/// the residual mass the shortest codeword deeper than k_max (lower) and the
/// larger of that and the far-corner codeword at k_max (upper).
struct LengthReport {
    Variant variant = Variant::Unbounded;
    int k_max = 0;
    double mean_length = 0.0;
    double mean_length_lower = 0.0;
    double mean_length_upper = 0.0;
    double entropy_hw = 0.0;  // H(W) over the enumerated atoms, renormalised
    std::size_t atom_count = 0;
    double covered_mass = 0.0;
    double residual_mass = 0.0;
    double tail_mass = 0.0;  // probability outside the decomposition support box
};

LengthReport expected_length(const Density& f, Variant variant, int k_max);
LengthReport expected_length(const Region& region, Variant variant, int k_max);

struct McLength {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::size_t rounds = 0;
    std::size_t retries = 0;
};

/// Sample mean of literal encode lengths (retrying depth exhaustion).
McLength mc_expected_length(const Density& f, Variant variant, std::size_t rounds, Rng& rng,
                            int k_max = kDefaultLocateDepth);

struct LevelErosion {
    double value = 0.0;  // E_Z[h(L_Z^+)]
    double error = 0.0;
};

/// E_Z[h_{(-)[0,1]^n}(L_Z^+(f))] with Z ~ f_Z, by midpoint quadrature over z.
LevelErosion expected_level_erosion_entropy(const Density& f, int z_steps = 256, int t_steps = 1024);

/// Exact E||X - xhat||_inf for one-dimensional built-ins by quadrature of the
/// tail probabilities; Monte Carlo is used for other densities.
MeanEstimate density_mean_inf_norm(const Density& f, std::span<const double> xhat, Rng& rng,
                                   std::size_t samples = 200000);

}  // namespace udc
